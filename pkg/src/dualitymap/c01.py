"""Piecewise-linear model of C[0,1] with sup norm and measure duals.

Functions are piecewise linear over a breakpoint grid on [0,1], which makes
the sup norm and the maximizing set M(f) = {s : |f(s)| = ||f||} exactly
computable: |f| is convex on each linear piece, so maxima sit at breakpoints,
and a whole segment belongs to M(f) only when both endpoint values equal the
same signed maximum.  Constant shifts f + t and scalings (1 +- t) f stay in
the class, so the probe curves of the coderivative engine are exact.

Dual elements model rca[0,1] as finitely many atoms plus a piecewise-constant
density; every duality measure used here is of that form.  Atomic members of
J(f) put weight alpha_j * f(s_j) on points s_j of M(f) with alpha_j > 0
summing to one; a plateau of f at +||f|| on [a,b] carries the density member
with constant density ||f|| / (b-a).

The dual norm implemented by ``tv_norm`` is the standard total variation
(sum of absolute atom weights plus the integral of |density|); for the
single-signed differences that arise along the probe curves it agrees with
the sup-over-sets variation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PwlFunction",
    "StepDensity",
    "RcaMeasure",
    "MaximizingSet",
    "MembershipReport",
    "SecondDualHandle",
    "embed_second_dual_c",
    "C01Space",
    "pwl_constant",
    "pwl_tent",
    "pwl_shift",
    "pwl_scale",
    "pwl_sub",
    "sup_norm",
    "maximizing_set",
    "peak_points",
    "atomic_duality_measure",
    "plateau_duality_measure",
    "canonical_duality_measure",
    "zero_measure",
    "atom_measure",
    "density_measure",
    "measure_scale",
    "measure_sub",
    "total_mass",
    "tv_norm",
    "pairing_c",
    "is_duality_member_c",
]

# Value comparisons against the exact piecewise-linear model only need to
# absorb representation rounding.
VALUE_TOL = 1e-12
POSITION_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PwlFunction:
    """Continuous piecewise-linear function on [0,1].

    ``values[i]`` is the function value at ``breakpoints[i]``; the function
    interpolates linearly in between.
    """

    breakpoints: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        bp = np.asarray(self.breakpoints, dtype=float)
        vals = np.asarray(self.values, dtype=float)
        if bp.ndim != 1 or bp.size < 2:
            raise ValueError("need at least the two endpoint breakpoints")
        if bp[0] != 0.0 or bp[-1] != 1.0:
            raise ValueError("breakpoints must start at 0 and end at 1")
        if np.any(np.diff(bp) <= 0.0):
            raise ValueError("breakpoints must be strictly increasing")
        if vals.shape != bp.shape or not np.all(np.isfinite(vals)):
            raise ValueError("values must be finite and match the breakpoints")
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "values", vals)

    def __call__(self, s):
        return np.interp(s, self.breakpoints, self.values)


def pwl_constant(c: float) -> PwlFunction:
    return PwlFunction(np.array([0.0, 1.0]), np.array([float(c), float(c)]))


def pwl_tent() -> PwlFunction:
    """The unit tent: 0 at the endpoints, peak 1 at 1/2."""
    return PwlFunction(np.array([0.0, 0.5, 1.0]), np.array([0.0, 1.0, 0.0]))


def pwl_shift(f: PwlFunction, c: float) -> PwlFunction:
    return PwlFunction(f.breakpoints, f.values + float(c))


def pwl_scale(f: PwlFunction, c: float) -> PwlFunction:
    return PwlFunction(f.breakpoints, f.values * float(c))


def pwl_sub(f: PwlFunction, g: PwlFunction) -> PwlFunction:
    """f - g on the union of the two breakpoint grids."""
    grid = np.union1d(f.breakpoints, g.breakpoints)
    return PwlFunction(grid, f(grid) - g(grid))


def sup_norm(f: PwlFunction) -> float:
    """max |f| over [0,1]; attained at a breakpoint by piecewise linearity."""
    return float(np.max(np.abs(f.values)))


@dataclass(frozen=True)
class MaximizingSet:
    """Exact set where |f| attains the sup norm: isolated atoms plus plateaus."""

    atoms: tuple
    intervals: tuple

    def contains(self, s: float, tol: float = POSITION_TOL) -> bool:
        s = float(s)
        if any(abs(s - a) <= tol for a in self.atoms):
            return True
        return any(a - tol <= s <= b + tol for a, b in self.intervals)

    def points(self) -> list:
        """One representative per component: atoms plus interval midpoints."""
        return list(self.atoms) + [0.5 * (a + b) for a, b in self.intervals]

    def same_set(self, other: "MaximizingSet", tol: float = 1e-9) -> bool:
        if len(self.atoms) != len(other.atoms) or len(self.intervals) != len(other.intervals):
            return False
        return all(
            abs(a - b) <= tol for a, b in zip(sorted(self.atoms), sorted(other.atoms))
        ) and all(
            abs(i[0] - j[0]) <= tol and abs(i[1] - j[1]) <= tol
            for i, j in zip(sorted(self.intervals), sorted(other.intervals))
        )


def maximizing_set(f: PwlFunction, tol: float = VALUE_TOL) -> MaximizingSet:
    """M(f) = {s : |f(s)| = ||f||}; rejects f = 0 where the set is undefined."""
    norm = sup_norm(f)
    if norm == 0.0:
        raise ValueError("maximizing set undefined for the zero function")
    bp, vals = f.breakpoints, f.values
    at_max = np.abs(np.abs(vals) - norm) <= tol
    nseg = bp.size - 1
    plateau = [
        bool(at_max[i] and at_max[i + 1] and abs(vals[i] - vals[i + 1]) <= tol)
        for i in range(nseg)
    ]
    intervals = []
    i = 0
    while i < nseg:
        if plateau[i]:
            j = i
            while j + 1 < nseg and plateau[j + 1]:
                j += 1
            intervals.append((float(bp[i]), float(bp[j + 1])))
            i = j + 1
        else:
            i += 1
    atoms = [
        float(bp[i])
        for i in range(bp.size)
        if at_max[i] and not (i > 0 and plateau[i - 1]) and not (i < nseg and plateau[i])
    ]
    return MaximizingSet(tuple(atoms), tuple(intervals))


def peak_points(f: PwlFunction, sign: int, tol: float = VALUE_TOL) -> list:
    """Representative points where f equals sign * ||f|| (sign is +1 or -1)."""
    norm = sup_norm(f)
    target = float(sign) * norm
    pts = []
    for s in maximizing_set(f).points():
        if abs(float(f(s)) - target) <= tol * max(1.0, norm):
            pts.append(float(s))
    return pts


@dataclass(frozen=True, eq=False)
class StepDensity:
    """Piecewise-constant density over a breakpoint grid on [0,1]."""

    breakpoints: np.ndarray
    values: np.ndarray  # one value per segment

    def __post_init__(self):
        bp = np.asarray(self.breakpoints, dtype=float)
        vals = np.asarray(self.values, dtype=float)
        if bp.ndim != 1 or bp.size < 2 or bp[0] != 0.0 or bp[-1] != 1.0:
            raise ValueError("density grid must run from 0 to 1")
        if np.any(np.diff(bp) <= 0.0):
            raise ValueError("density grid must be strictly increasing")
        if vals.shape != (bp.size - 1,) or not np.all(np.isfinite(vals)):
            raise ValueError("need one finite density value per grid segment")
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "values", vals)

    def value_in(self, a: float, b: float) -> float:
        """Density value on a subinterval (a,b) of a single grid segment."""
        mid = 0.5 * (a + b)
        idx = int(np.searchsorted(self.breakpoints, mid, side="right")) - 1
        return float(self.values[min(max(idx, 0), self.values.size - 1)])


@dataclass(frozen=True, eq=False)
class RcaMeasure:
    """Signed measure on [0,1]: finitely many atoms plus an optional density."""

    atoms: tuple = ()
    density: StepDensity | None = None

    def __post_init__(self):
        merged: dict[float, float] = {}
        for loc, w in self.atoms:
            loc, w = float(loc), float(w)
            if not (0.0 <= loc <= 1.0):
                raise ValueError(f"atom location {loc} outside [0,1]")
            if not math.isfinite(w):
                raise ValueError("atom weights must be finite")
            merged[loc] = merged.get(loc, 0.0) + w
        cleaned = tuple(sorted((loc, w) for loc, w in merged.items() if w != 0.0))
        object.__setattr__(self, "atoms", cleaned)


def zero_measure() -> RcaMeasure:
    return RcaMeasure()


def atom_measure(atoms) -> RcaMeasure:
    return RcaMeasure(atoms=tuple((float(l), float(w)) for l, w in atoms))


def density_measure(breakpoints, values) -> RcaMeasure:
    return RcaMeasure(density=StepDensity(np.asarray(breakpoints), np.asarray(values)))


def measure_scale(mu: RcaMeasure, c: float) -> RcaMeasure:
    c = float(c)
    atoms = tuple((loc, c * w) for loc, w in mu.atoms)
    density = None
    if mu.density is not None:
        density = StepDensity(mu.density.breakpoints, mu.density.values * c)
    return RcaMeasure(atoms=atoms, density=density)


def measure_sub(mu: RcaMeasure, nu: RcaMeasure) -> RcaMeasure:
    atoms = list(mu.atoms) + [(loc, -w) for loc, w in nu.atoms]
    density = None
    if mu.density is not None or nu.density is not None:
        grids = [d.breakpoints for d in (mu.density, nu.density) if d is not None]
        grid = grids[0] if len(grids) == 1 else np.union1d(grids[0], grids[1])
        vals = np.zeros(grid.size - 1)
        for k in range(grid.size - 1):
            a, b = grid[k], grid[k + 1]
            left = mu.density.value_in(a, b) if mu.density is not None else 0.0
            right = nu.density.value_in(a, b) if nu.density is not None else 0.0
            vals[k] = left - right
        density = StepDensity(grid, vals)
    return RcaMeasure(atoms=tuple(atoms), density=density)


def total_mass(mu: RcaMeasure) -> float:
    """mu([0,1]): signed sum of atom weights plus the density integral."""
    mass = sum(w for _, w in mu.atoms)
    if mu.density is not None:
        mass += float(np.sum(mu.density.values * np.diff(mu.density.breakpoints)))
    return float(mass)


def tv_norm(mu: RcaMeasure) -> float:
    """Total variation: sum |atom weights| + integral of |density|."""
    tv = sum(abs(w) for _, w in mu.atoms)
    if mu.density is not None:
        tv += float(np.sum(np.abs(mu.density.values) * np.diff(mu.density.breakpoints)))
    return float(tv)


def pairing_c(mu: RcaMeasure, f: PwlFunction) -> float:
    """<mu, f> = integral of f d(mu), exact for atoms + step density vs linear f."""
    total = sum(w * float(f(loc)) for loc, w in mu.atoms)
    if mu.density is not None:
        grid = np.union1d(mu.density.breakpoints, f.breakpoints)
        fvals = f(grid)
        for k in range(grid.size - 1):
            a, b = grid[k], grid[k + 1]
            d = mu.density.value_in(a, b)
            if d != 0.0:
                total += d * (b - a) * 0.5 * (fvals[k] + fvals[k + 1])
    return float(total)


@dataclass(frozen=True)
class MembershipReport:
    """``member`` is the duality-set test; ``support_ok`` checks the measure
    lives on M(f), which is necessary for membership but reported separately."""

    member: bool
    support_ok: bool


def is_duality_member_c(mu: RcaMeasure, f: PwlFunction, tol: float = 1e-9) -> MembershipReport:
    """Test mu in J(f): tv norm matches ||f|| and <mu, f> = ||f||**2 within tol."""
    norm = sup_norm(f)
    if norm == 0.0:
        raise ValueError("membership test needs ||f|| > 0")
    member = (
        abs(tv_norm(mu) - norm) <= tol and abs(pairing_c(mu, f) - norm * norm) <= tol
    )
    mset = maximizing_set(f)
    support_ok = all(mset.contains(loc, tol) for loc, _ in mu.atoms)
    if support_ok and mu.density is not None:
        bp, vals = mu.density.breakpoints, mu.density.values
        for k in range(vals.size):
            if vals[k] != 0.0:
                inside = any(
                    a - tol <= bp[k] and bp[k + 1] <= b + tol for a, b in mset.intervals
                )
                if not inside:
                    support_ok = False
                    break
    return MembershipReport(member, support_ok)


def atomic_duality_measure(f: PwlFunction, points, alphas=None) -> RcaMeasure:
    """Atomic member of J(f): weight alpha_j * f(s_j) at points s_j of M(f).

    The alphas must be positive and sum to one; they default to uniform.
    """
    norm = sup_norm(f)
    if norm == 0.0:
        raise ValueError("degenerate: the zero function has J(0) = {0*}")
    points = [float(s) for s in points]
    if not points:
        raise ValueError("need at least one atom point")
    if alphas is None:
        alphas = [1.0 / len(points)] * len(points)
    alphas = [float(a) for a in alphas]
    if len(alphas) != len(points):
        raise ValueError("alphas must pair with points")
    if any(a <= 0.0 for a in alphas):
        raise ValueError("alphas must be strictly positive")
    if abs(sum(alphas) - 1.0) > 1e-12:
        raise ValueError("alphas must sum to 1")
    mset = maximizing_set(f)
    for s in points:
        if not mset.contains(s):
            raise ValueError(f"point {s} is not in the maximizing set of f")
    return atom_measure((s, a * float(f(s))) for s, a in zip(points, alphas))


def plateau_duality_measure(f: PwlFunction, a: float, b: float) -> RcaMeasure:
    """Density member of J(f) for a plateau f = ||f|| on [a, b]."""
    a, b = float(a), float(b)
    if not (0.0 <= a < b <= 1.0):
        raise ValueError("need 0 <= a < b <= 1")
    norm = sup_norm(f)
    if norm == 0.0:
        raise ValueError("degenerate: ||f|| = 0")
    grid = [s for s in f.breakpoints if a < s < b] + [a, b]
    if any(abs(float(f(s)) - norm) > VALUE_TOL * max(1.0, norm) for s in grid):
        raise ValueError(f"f is not constant at ||f|| on [{a}, {b}]")
    bp = [0.0] + sorted({a, b}) + [1.0]
    bp = sorted(set(bp))
    vals = [norm / (b - a) if a <= 0.5 * (bp[k] + bp[k + 1]) <= b else 0.0 for k in range(len(bp) - 1)]
    return density_measure(np.array(bp), np.array(vals))


def canonical_duality_measure(f: PwlFunction) -> RcaMeasure:
    """Canonical member of J(f): uniform atoms on the maximizing representatives."""
    if sup_norm(f) == 0.0:
        return zero_measure()
    return atomic_duality_measure(f, maximizing_set(f).points())


@dataclass(frozen=True, eq=False)
class SecondDualHandle:
    """A nonnegative f acting on measures by integration: <f**, mu> = <mu, f>."""

    function: PwlFunction

    def __call__(self, mu: RcaMeasure) -> float:
        return pairing_c(mu, self.function)


def embed_second_dual_c(f: PwlFunction) -> SecondDualHandle:
    """Embed f in the nonnegative cone into the second dual via integration."""
    if np.any(f.values < 0.0):
        raise ValueError("only the nonnegative cone embeds into the second dual")
    return SecondDualHandle(f)


@dataclass(frozen=True)
class C01Space:
    """Space descriptor and engine backend for the piecewise-linear C[0,1] model."""

    def norm(self, f: PwlFunction) -> float:
        return sup_norm(f)

    def dual_norm(self, mu: RcaMeasure) -> float:
        return tv_norm(mu)

    def pair(self, mu: RcaMeasure, f: PwlFunction) -> float:
        return pairing_c(mu, f)

    def sub(self, f: PwlFunction, g: PwlFunction) -> PwlFunction:
        return pwl_sub(f, g)

    def dual_sub(self, mu: RcaMeasure, nu: RcaMeasure) -> RcaMeasure:
        return measure_sub(mu, nu)

    def canonical_dual(self, f: PwlFunction) -> RcaMeasure:
        return canonical_duality_measure(f)

    def is_member(self, f: PwlFunction, mu: RcaMeasure, tol: float = 1e-9) -> bool:
        if sup_norm(f) == 0.0:
            return tv_norm(mu) <= tol
        return is_duality_member_c(mu, f, tol).member

    def in_second_dual_domain(self, h: PwlFunction) -> bool:
        # Only the nonnegative cone of C[0,1] embeds into the second dual.
        return bool(np.all(h.values >= 0.0))

    def descriptor(self) -> dict:
        return {"space": "c01"}
