"""Set-valued normalized duality mapping on L1 over a finite weighted measure space.

The measure space has n atoms with strictly positive weights, so every
measurable set is a union of atoms and "a set of measure zero" can only be
the empty set.  L1 functions and L-infinity selections are value lists over
the atoms.  A selection j(f) of the duality set J(f) takes the value
+||f||_1 where f > 0, -||f||_1 where f < 0, and a free value a(s) with
|a(s)| <= ||f||_1 on the zero set; J(f) is a singleton exactly when f has no
zero values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "FiniteMeasureSpace",
    "SecondDualHandle",
    "DualityClassification",
    "l1_norm",
    "linf_norm",
    "pairing_l1",
    "zero_selection",
    "duality_selection",
    "is_duality_member",
    "duality_set_classify",
    "embed_second_dual",
    "strict_convexity_counterexample",
    "indicator",
    "mask_from_indices",
]


@dataclass(frozen=True, eq=False)
class FiniteMeasureSpace:
    """n-point measure space; ``weights[i]`` is the measure of the i-th atom."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 1 or w.size < 1:
            raise ValueError("weights must be a one-dimensional list with n >= 1")
        if not np.all(np.isfinite(w)) or np.any(w <= 0.0):
            raise ValueError("all weights must be strictly positive and finite")
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.size

    def measure(self, mask) -> float:
        """mu(D) for a boolean mask D."""
        return float(np.sum(self.weights[self._mask(mask)]))

    def _mask(self, mask) -> np.ndarray:
        m = np.asarray(mask, dtype=bool)
        if m.shape != (self.n,):
            raise ValueError("mask length does not match the point count")
        return m

    def check(self, values) -> np.ndarray:
        v = np.asarray(values, dtype=float)
        if v.shape != (self.n,):
            raise ValueError(
                f"value list of length {v.size} does not match the {self.n}-point space"
            )
        if not np.all(np.isfinite(v)):
            raise ValueError("values must be finite")
        return v

    # -- engine protocol -------------------------------------------------
    def norm(self, f) -> float:
        return l1_norm(f, self)

    def dual_norm(self, g) -> float:
        return linf_norm(g, self)

    def pair(self, g, f) -> float:
        return pairing_l1(g, f, self)

    def sub(self, f, g) -> np.ndarray:
        return self.check(f) - self.check(g)

    dual_sub = sub

    def canonical_dual(self, f) -> np.ndarray:
        f = self.check(f)
        if not np.any(f):
            return zero_selection(self)
        return duality_selection(f, self, np.zeros(int(np.sum(f == 0.0))))

    def is_member(self, f, g, tol: float = 1e-10) -> bool:
        return is_duality_member(g, f, self, tol)

    def in_second_dual_domain(self, h) -> bool:
        # Only the positive cone embeds into the second dual.
        return bool(np.all(self.check(h) >= 0.0))

    def descriptor(self) -> dict:
        return {"space": "l1", "weights": [float(w) for w in self.weights]}


def mask_from_indices(space: FiniteMeasureSpace, indices) -> np.ndarray:
    """Boolean mask over the atoms from a list of 0-based indices."""
    mask = np.zeros(space.n, dtype=bool)
    for i in indices:
        i = int(i)
        if not 0 <= i < space.n:
            raise ValueError(f"index {i} outside the {space.n}-point space")
        mask[i] = True
    return mask


def indicator(space: FiniteMeasureSpace, mask) -> np.ndarray:
    """Indicator function of a subset, as an L1 value list."""
    return space._mask(mask).astype(float)


def l1_norm(f, space: FiniteMeasureSpace) -> float:
    """Weighted absolute sum: sum |f_i| * weight_i."""
    return float(np.sum(np.abs(space.check(f)) * space.weights))


def linf_norm(g, space: FiniteMeasureSpace) -> float:
    """Essential sup = max |g_i| (every atom has positive weight)."""
    return float(np.max(np.abs(space.check(g))))


def pairing_l1(g, f, space: FiniteMeasureSpace) -> float:
    """Canonical pairing <g, f> = sum g_i f_i weight_i."""
    return float(np.sum(space.check(g) * space.check(f) * space.weights))


def zero_selection(space: FiniteMeasureSpace) -> np.ndarray:
    """The origin of the dual space; J(0) = {0*}."""
    return np.zeros(space.n)


def duality_selection(f, space: FiniteMeasureSpace, a=()) -> np.ndarray:
    """One member of J(f): +-||f||_1 on the sign sets, free values on the zero set.

    ``a`` lists the free values in zero-set position order and must satisfy
    |a_k| <= ||f||_1.  For f = 0 use ``zero_selection``; the selection
    template needs f != 0.
    """
    f = space.check(f)
    norm = l1_norm(f, space)
    if norm == 0.0:
        raise ValueError("f = 0 is degenerate here: J(0) = {0*}, use zero_selection")
    a = np.asarray(a, dtype=float)
    zero_set = np.flatnonzero(f == 0.0)
    if a.size != zero_set.size:
        raise ValueError(
            f"free parameter has {a.size} values but the zero set has {zero_set.size} points"
        )
    if a.size and np.max(np.abs(a)) > norm:
        raise ValueError("free values must satisfy |a(s)| <= ||f||_1")
    g = np.where(f > 0.0, norm, np.where(f < 0.0, -norm, 0.0))
    g[zero_set] = a
    return g


def is_duality_member(g, f, space: FiniteMeasureSpace, tol: float = 1e-10) -> bool:
    """True iff ||g||_inf = ||f||_1 and <g, f> = ||f||_1**2, both within tol."""
    norm = l1_norm(f, space)
    return (
        abs(linf_norm(g, space) - norm) <= tol
        and abs(pairing_l1(g, f, space) - norm * norm) <= tol
    )


@dataclass(frozen=True, eq=False)
class DualityClassification:
    """Shape of the duality set J(f): singleton or an infinite template family."""

    singleton: bool
    free_points: np.ndarray  # boolean mask of the zero set
    selection: np.ndarray  # the canonical member (free values 0)


def duality_set_classify(f, space: FiniteMeasureSpace) -> DualityClassification:
    """Classify J(f): a singleton iff f has no zero values (all atoms weigh > 0).

    For f = 0 the report is the singleton {0*} with no free points.
    """
    f = space.check(f)
    zero_mask = f == 0.0
    if not np.any(f):
        return DualityClassification(True, np.zeros(space.n, dtype=bool), zero_selection(space))
    selection = duality_selection(f, space, np.zeros(int(np.sum(zero_mask))))
    return DualityClassification(not bool(np.any(zero_mask)), zero_mask, selection)


@dataclass(frozen=True, eq=False)
class SecondDualHandle:
    """A nonnegative f acting on selections by integration: Phi_f(k*) = <k*, f>."""

    function: np.ndarray
    space: FiniteMeasureSpace

    def __call__(self, k_star) -> float:
        return pairing_l1(k_star, self.function, self.space)


def embed_second_dual(f, space: FiniteMeasureSpace) -> SecondDualHandle:
    """Embed f in the positive cone into the second dual via integration."""
    f = space.check(f)
    if np.any(f < 0.0):
        raise ValueError("only the positive cone embeds into the second dual")
    return SecondDualHandle(f, space)


def strict_convexity_counterexample(space: FiniteMeasureSpace, mask_a, mask_b):
    """Unit vectors f, g with ||(f+g)/2||_1 = 1: the classical failure of strict convexity.

    f and g are the normalized indicators of two disjoint positive-measure
    sets.  Returns (f, g, midpoint_norm).
    """
    ma = space._mask(mask_a)
    mb = space._mask(mask_b)
    if np.any(ma & mb):
        raise ValueError("the two sets must be disjoint")
    mu_a = space.measure(ma)
    mu_b = space.measure(mb)
    if mu_a == 0.0 or mu_b == 0.0:
        raise ValueError("both sets must have positive measure")
    f = indicator(space, ma) / mu_a
    g = indicator(space, mb) / mu_b
    midpoint_norm = l1_norm((f + g) / 2.0, space)
    return f, g, midpoint_norm
