"""Normalized duality mapping on the finite-support model of l_p, 1 < p < inf.

Vectors are finitely supported real sequences stored as their first n
coordinates.  All formulas restrict exactly to this model, so there is no
truncation error.  The duality map sends x to the l_q vector with i-th
coordinate sign(x_i) |x_i|**(p-1) / ||x||_p**(p-2); its inverse is the same
formula with the conjugate exponent q = p / (p - 1), and the canonical
pairing between l_q and l_p is the plain dot product.

The coordinate rule sign(x_i) * |x_i|**(p-1) avoids evaluating 0 to a
negative power when p < 2: the coordinate value at x_i = 0 is 0.  p = 2 is
deliberately not special-cased; the identity behavior must emerge from the
formula itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "conjugate_exponent",
    "as_vector",
    "lp_norm",
    "duality_map",
    "dual_duality_map",
    "pairing",
    "is_duality_member_lp",
    "LpSpace",
]


def _check_exponent(p: float) -> float:
    p = float(p)
    if not np.isfinite(p) or p <= 1.0:
        raise ValueError(f"exponent must satisfy 1 < p < inf, got {p}")
    return p


def conjugate_exponent(p: float) -> float:
    """Exponent q with 1/p + 1/q = 1, computed as q = p / (p - 1)."""
    p = _check_exponent(p)
    return p / (p - 1.0)


def as_vector(x) -> np.ndarray:
    """Coerce to a 1-d float array and reject non-finite coordinates."""
    v = np.asarray(x, dtype=float)
    if v.ndim != 1 or v.size < 1:
        raise ValueError("vector must be one-dimensional with at least one coordinate")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector coordinates must be finite")
    return v


def lp_norm(x, p: float) -> float:
    """(sum |x_i|**p)**(1/p)."""
    p = _check_exponent(p)
    v = as_vector(x)
    return float(np.sum(np.abs(v) ** p) ** (1.0 / p))


def duality_map(x, p: float) -> np.ndarray:
    """Normalized duality map J: l_p -> l_q applied to x.

    Returns the zero vector for x = 0 (J(0) = 0 in the dual), otherwise the
    vector with coordinates sign(x_i) |x_i|**(p-1) / ||x||_p**(p-2).  The
    result u satisfies <u, x> = ||x||_p**2 and ||u||_q = ||x||_p.
    """
    p = _check_exponent(p)
    v = as_vector(x)
    norm = lp_norm(v, p)
    if norm == 0.0:
        return np.zeros_like(v)
    return np.sign(v) * np.abs(v) ** (p - 1.0) / norm ** (p - 2.0)


def dual_duality_map(u, q: float) -> np.ndarray:
    """Duality map J*: l_q -> l_p; same formula with the exponent q.

    With q conjugate to p this inverts ``duality_map``: J* o J = identity.
    """
    return duality_map(u, q)


def pairing(u, x) -> float:
    """Canonical pairing <u, x> = sum u_i x_i between l_q and l_p."""
    uu = as_vector(u)
    xx = as_vector(x)
    if uu.shape != xx.shape:
        raise ValueError(f"dimension mismatch: {uu.shape[0]} vs {xx.shape[0]}")
    return float(np.dot(uu, xx))


def is_duality_member_lp(u, x, p: float, tol: float = 1e-9) -> bool:
    """Check <u, x> = ||x||_p**2 and ||u||_q = ||x||_p to relative tol."""
    p = _check_exponent(p)
    q = conjugate_exponent(p)
    nx = lp_norm(x, p)
    pair_err = abs(pairing(u, x) - nx * nx)
    norm_err = abs(lp_norm(u, q) - nx)
    return pair_err <= tol * max(1.0, nx * nx) and norm_err <= tol * max(1.0, nx)


@dataclass(frozen=True)
class LpSpace:
    """The space descriptor for l_p; also the backend hook used by the engine.

    Primal elements and dual elements are both plain 1-d arrays; the dual
    space is l_q with q = p / (p - 1).
    """

    p: float

    def __post_init__(self):
        _check_exponent(self.p)

    @property
    def q(self) -> float:
        return conjugate_exponent(self.p)

    # -- engine protocol -------------------------------------------------
    def norm(self, x) -> float:
        return lp_norm(x, self.p)

    def dual_norm(self, u) -> float:
        return lp_norm(u, self.q)

    def pair(self, u, x) -> float:
        return pairing(u, x)

    def sub(self, x, y) -> np.ndarray:
        return as_vector(x) - as_vector(y)

    dual_sub = sub

    def duality(self, x) -> np.ndarray:
        return duality_map(x, self.p)

    canonical_dual = duality

    def is_member(self, x, u, tol: float = 1e-9) -> bool:
        return is_duality_member_lp(u, x, self.p, tol)

    def in_second_dual_domain(self, y) -> bool:
        # l_p is reflexive: every primal vector represents a second dual.
        as_vector(y)
        return True

    def descriptor(self) -> dict:
        return {"space": "lp", "p": self.p}
