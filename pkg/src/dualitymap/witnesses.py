"""Catalog of non-membership witnesses: probe curves with closed-form limits.

Each builder returns the exact construction used to disprove membership of a
candidate in the coderivative value: a base pair in gph J, a probe curve, and
the closed-form limit of the difference quotient where one exists.  The
curves fall into three families:

* scaling curves (1 +- t) x paired with (1 +- t) x*, valid in every model by
  homogeneity of J;
* coordinate / indicator bumps x + t e_m and f +- t chi_D, whose duality
  selections follow the sign-template of the set-valued models;
* constant shifts f +- t in the sup-norm model, where the shifted function
  keeps (part of) the maximizing set and atomic selections shift with it.

Hypothesis validation is strict: a violated hypothesis raises
``HypothesisViolation`` naming the failed condition rather than producing a
curve outside its validity window.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import c01, l1, lp, serialize
from .coderivative import CoderivativeQuery, GraphPair, ProbeCurve

__all__ = ["HypothesisViolation", "Witness", "build_witness", "THEOREM_IDS"]


class HypothesisViolation(ValueError):
    """A witness request whose parameters break the theorem's hypotheses."""

    def __init__(self, hypothesis: str):
        self.hypothesis = hypothesis
        super().__init__(f"hypothesis violated: {hypothesis}")


@dataclass(frozen=True, eq=False)
class Witness:
    """A ready-to-run non-membership scenario.

    ``claimed_bound`` is the closed-form quotient limit where the
    construction computes one, or None when only positivity is claimed.
    ``one_sided`` marks bounds that are lower estimates rather than exact
    limits.
    """

    theorem: str
    query: CoderivativeQuery
    curve: ProbeCurve
    claimed_bound: float | None
    one_sided: bool = False


def _require(condition: bool, hypothesis: str):
    if not condition:
        raise HypothesisViolation(hypothesis)


def _sign_mask_uniform(values: np.ndarray, mask: np.ndarray, name: str) -> float:
    """Common nonzero sign of ``values`` on ``mask``; violation otherwise."""
    vals = values[mask]
    if np.all(vals > 0.0):
        return 1.0
    if np.all(vals < 0.0):
        return -1.0
    raise HypothesisViolation(f"{name} must have one strict sign on D")


# ---------------------------------------------------------------------------
# l_p witnesses
# ---------------------------------------------------------------------------


def _pick_direction(x: np.ndarray, w: np.ndarray, p: float, params: dict) -> int:
    """Coordinate m with w_m != 0, preferring x_m != 0.

    Along the bump x + t e_m the dual difference behaves like t**(p-1) at a
    zero coordinate, which for p < 2 dominates t and drives the quotient to
    zero; a coordinate with x_m != 0 keeps the map locally Lipschitz along
    the ray and the limit positive.
    """
    if "m" in params and params["m"] is not None:
        m = int(params["m"])
        _require(0 <= m < w.size and w[m] != 0.0, "w_m != 0 at the requested m")
        return m
    nonzero = np.flatnonzero(w)
    _require(nonzero.size > 0, "w != 0")
    preferred = [m for m in nonzero if x[m] != 0.0]
    pool = preferred if preferred else list(nonzero)
    return int(max(pool, key=lambda m: abs(w[m])))


def _thm31(space: lp.LpSpace, params: dict) -> Witness:
    x = lp.as_vector(params["x"])
    w = lp.as_vector(params["w"])
    _require(x.size == w.size, "x and w share a dimension")
    m = _pick_direction(x, w, space.p, params)
    s = float(np.sign(w[m]))
    direction = np.zeros_like(x)
    direction[m] = s
    x_star = space.duality(x)

    def gen(t: float) -> GraphPair:
        z = x + t * direction
        return GraphPair(z, space.duality(z))

    at_origin = not np.any(x)
    bound = abs(w[m]) / 2.0 if (at_origin or space.p == 2.0) else None
    query = CoderivativeQuery(space, GraphPair(x, x_star), candidate=w)
    curve = ProbeCurve(f"thm31:bump[m={m},sign={s:+.0f}]", gen, t_max=1.0)
    return Witness("thm31", query, curve, bound, one_sided=bound is None)


def _thm32(space: lp.LpSpace, params: dict) -> Witness:
    x = lp.as_vector(params["x"])
    y = lp.as_vector(params["y"])
    x_star = space.duality(x)
    ip = lp.pairing(x_star, y)
    _require(ip != 0.0, "<J(x), y> != 0")
    s = -1.0 if ip > 0.0 else 1.0

    def gen(t: float) -> GraphPair:
        scale = 1.0 + s * t
        return GraphPair(scale * x, scale * x_star)

    query = CoderivativeQuery(
        space, GraphPair(x, x_star), candidate=np.zeros_like(x), second_dual=y
    )
    curve = ProbeCurve(f"thm32:scale[{s:+.0f}]", gen, t_max=0.5)
    return Witness("thm32", query, curve, abs(ip) / (2.0 * space.norm(x)))


def _thm33(space: lp.LpSpace, params: dict) -> Witness:
    x = lp.as_vector(params["x"])
    a = float(params["a"])
    _require(np.any(x), "x != 0")
    _require(a > 0.0, "a > 0")
    _require(a != 1.0, "a != 1")
    x_star = space.duality(x)
    s = 1.0 if a > 1.0 else -1.0

    def gen(t: float) -> GraphPair:
        scale = 1.0 + s * t
        return GraphPair(scale * x, scale * x_star)

    query = CoderivativeQuery(
        space, GraphPair(x, x_star), candidate=a * x_star, second_dual=x
    )
    curve = ProbeCurve(f"thm33:scale[{s:+.0f}]", gen, t_max=0.5)
    return Witness("thm33", query, curve, abs(a - 1.0) * space.norm(x) / 2.0)


# ---------------------------------------------------------------------------
# L_1 witnesses
# ---------------------------------------------------------------------------


def _thm45_case1(space: l1.FiniteMeasureSpace, params: dict) -> Witness:
    f = space.check(params["f"])
    k_star = space.check(params["k_star"])
    _require(bool(np.all(f != 0.0)), "mu{f = 0} = 0 (f has no zero values)")
    ip = l1.pairing_l1(k_star, f, space)
    _require(ip != 0.0, "<k*, f> != 0")
    f_star = l1.duality_selection(f, space)
    s = 1.0 if ip > 0.0 else -1.0

    def gen(t: float) -> GraphPair:
        scale = 1.0 + s * t
        return GraphPair(scale * f, scale * f_star)

    query = CoderivativeQuery(space, GraphPair(f, f_star), candidate=k_star)
    curve = ProbeCurve(f"thm45_case1:scale[{s:+.0f}]", gen, t_max=0.5)
    return Witness("thm45_case1", query, curve, abs(ip) / (2.0 * space.norm(f)))


def _thm45_case2(space: l1.FiniteMeasureSpace, params: dict) -> Witness:
    f = space.check(params["f"])
    k_star = space.check(params["k_star"])
    mask = l1.mask_from_indices(space, params["D"])
    a = float(params["a"])
    _require(bool(np.all(f != 0.0)), "mu{f = 0} = 0 (f has no zero values)")
    scale = max(1.0, l1.linf_norm(k_star, space) * space.norm(f))
    _require(abs(l1.pairing_l1(k_star, f, space)) <= 1e-9 * scale, "<k*, f> = 0")
    _require(bool(np.any(mask)), "D is nonempty")
    _require(a > 0.0, "a > 0")
    fd = f[mask]
    _require(
        bool(np.all(fd > a)) or bool(np.all(fd < -a)),
        "f has one strict sign beyond a on D",
    )
    sigma = _sign_mask_uniform(k_star, mask, "k*")
    chi = l1.indicator(space, mask)
    f_star = l1.duality_selection(f, space)

    def gen(t: float) -> GraphPair:
        h = f + sigma * t * chi
        return GraphPair(h, l1.duality_selection(h, space))

    mu_d = space.measure(mask)
    bound = sigma * l1.pairing_l1(k_star, chi, space) / (2.0 * mu_d)
    query = CoderivativeQuery(space, GraphPair(f, f_star), candidate=k_star)
    curve = ProbeCurve(f"thm45_case2:bump[{sigma:+.0f}*chi_D]", gen, t_max=a / 2.0)
    return Witness("thm45_case2", query, curve, bound)


def _thm46(space: l1.FiniteMeasureSpace, params: dict) -> Witness:
    k_star = space.check(params["k_star"])
    mask = l1.mask_from_indices(space, params["D"])
    _require(bool(np.any(k_star)), "k* != 0*")
    _require(bool(np.any(mask)), "D is nonempty")
    sigma = _sign_mask_uniform(k_star, mask, "k*")
    chi = l1.indicator(space, mask)
    mu_d = space.measure(mask)
    theta = np.zeros(space.n)

    def gen(t: float) -> GraphPair:
        h = sigma * t * chi
        norm = t * mu_d
        selection = np.where(mask, sigma * norm, -sigma * norm)
        return GraphPair(h, selection)

    bound = sigma * l1.pairing_l1(k_star, chi, space) / (2.0 * mu_d)
    query = CoderivativeQuery(space, GraphPair(theta, theta.copy()), candidate=k_star)
    curve = ProbeCurve(f"thm46:bump[{sigma:+.0f}*chi_D]", gen, t_max=1.0)
    return Witness("thm46", query, curve, bound)


def _thm47(space: l1.FiniteMeasureSpace, params: dict) -> Witness:
    f = space.check(params["f"])
    mask = l1.mask_from_indices(space, params["D"])
    a = float(params["a"])
    _require(bool(np.all(f >= 0.0)) and bool(np.any(f)), "f in L1+ \\ {0}")
    _require(a > 0.0, "a > 0")
    _require(bool(np.any(mask)), "D is nonempty")
    _require(bool(np.all(f[mask] > a)), "D subset {f > a}")
    chi = l1.indicator(space, mask)
    positive = f > 0.0
    norm = space.norm(f)
    f_star = np.where(positive, norm, 0.0)

    def gen(t: float) -> GraphPair:
        h = f - t * chi
        return GraphPair(h, np.where(positive, l1.l1_norm(h, space), 0.0))

    query = CoderivativeQuery(
        space, GraphPair(f, f_star), candidate=-f_star, second_dual=f
    )
    curve = ProbeCurve("thm47:bump[-chi_D]", gen, t_max=a / 2.0)
    return Witness("thm47", query, curve, norm)


def _cor48(space: l1.FiniteMeasureSpace, params: dict) -> Witness:
    f = space.check(params["f"])
    u_star = space.check(params["u_star"])
    _require(bool(np.all(f > 0.0)), "f strictly positive")
    norm = space.norm(f)
    margins = u_star - norm
    _require(bool(np.all(margins > 0.0)), "u* > J(f) pointwise")
    if params.get("E") is not None:
        mask = l1.mask_from_indices(space, params["E"])
        _require(bool(np.any(mask)), "E is nonempty")
        b = float(params["b"]) if params.get("b") is not None else float(np.min(margins[mask]))
        _require(b > 0.0, "margin b > 0")
        slack = 1e-12 * max(1.0, b, norm)
        _require(bool(np.all(margins[mask] >= b - slack)), "u* >= ||f||_1 + b on E")
    elif params.get("b") is not None:
        b = float(params["b"])
        _require(b > 0.0, "margin b > 0")
        mask = margins >= b
        _require(bool(np.any(mask)), "E = {u* >= ||f||_1 + b} is nonempty")
    else:
        b = float(np.max(margins)) / 2.0
        mask = margins > b
    chi = l1.indicator(space, mask)
    f_star = np.full(space.n, norm)

    def gen(t: float) -> GraphPair:
        h = f + t * chi
        return GraphPair(h, np.full(space.n, l1.l1_norm(h, space)))

    query = CoderivativeQuery(
        space, GraphPair(f, f_star), candidate=u_star, second_dual=f
    )
    curve = ProbeCurve("cor48:bump[+chi_E]", gen, t_max=1.0)
    return Witness("cor48", query, curve, b / 2.0, one_sided=True)


# ---------------------------------------------------------------------------
# C[0,1] witnesses
# ---------------------------------------------------------------------------


def _resolve_measure(params: dict, key: str, f: c01.PwlFunction) -> c01.RcaMeasure:
    """A member of J(f) from explicit params, a selection spec, or canonical."""
    if params.get(key) is not None:
        mu = serialize.measure_from_json(params[key])
    elif params.get("selection") is not None:
        sel = params["selection"]
        if sel.get("type") == "plateau":
            mu = c01.plateau_duality_measure(f, sel["a"], sel["b"])
        else:
            mu = c01.atomic_duality_measure(f, sel["points"], sel.get("alphas"))
    else:
        mu = c01.canonical_duality_measure(f)
    _require(c01.is_duality_member_c(mu, f).member, f"{key} in J(f)")
    return mu


def _thm53(space: c01.C01Space, params: dict) -> Witness:
    f = serialize.pwl_from_json(params["f"])
    _require(bool(np.all(f.values >= 0.0)), "f in C+[0,1]")
    norm = c01.sup_norm(f)
    _require(norm > 0.0, "||f|| > 0")
    mu = _resolve_measure(params, "mu", f)

    def gen(t: float) -> GraphPair:
        return GraphPair(c01.pwl_scale(f, 1.0 - t), c01.measure_scale(mu, 1.0 - t))

    query = CoderivativeQuery(
        space, GraphPair(f, mu), candidate=c01.zero_measure(), second_dual=f
    )
    curve = ProbeCurve("thm53:scale[-1]", gen, t_max=0.5)
    return Witness("thm53", query, curve, norm / 2.0)


def _thm54(space: c01.C01Space, params: dict) -> Witness:
    f = serialize.pwl_from_json(params["f"])
    lam = serialize.measure_from_json(params["lambda"])
    ip = c01.pairing_c(lam, f)
    _require(ip != 0.0, "<lambda, f> != 0")
    mu = _resolve_measure(params, "mu", f)
    s = 1.0 if ip > 0.0 else -1.0

    def gen(t: float) -> GraphPair:
        scale = 1.0 + s * t
        return GraphPair(c01.pwl_scale(f, scale), c01.measure_scale(mu, scale))

    query = CoderivativeQuery(space, GraphPair(f, mu), candidate=lam)
    curve = ProbeCurve(f"thm54:scale[{s:+.0f}]", gen, t_max=0.5)
    return Witness("thm54", query, curve, abs(ip) / (2.0 * c01.sup_norm(f)))


def _thm55(space: c01.C01Space, params: dict) -> Witness:
    f = serialize.pwl_from_json(params["f"])
    lam = serialize.measure_from_json(params["lambda"])
    mass = c01.total_mass(lam)
    _require(mass != 0.0, "lambda[0,1] != 0")
    sgn = 1.0 if mass > 0.0 else -1.0
    norm = c01.sup_norm(f)

    if norm == 0.0:
        # At the origin the shifted constant attains its norm everywhere; one
        # atom suffices.
        pts, alph = [0.5], [1.0]
        mu = c01.zero_measure()
        t_max = 1.0
        shift = sgn
    else:
        same_side = c01.peak_points(f, int(sgn))
        if same_side:
            # The shift direction keeps these peaks maximizing for every t.
            pts, shift, t_max = same_side, sgn, 1.0
        else:
            pts = c01.peak_points(f, -int(sgn))
            extreme = float(np.max(sgn * f.values))  # max of sgn * f, < norm here
            window = (norm - extreme) / 2.0
            shift, t_max = sgn, window / 2.0
        alph = [1.0 / len(pts)] * len(pts)
        mu = c01.atomic_duality_measure(f, pts, alph)

    def gen(t: float) -> GraphPair:
        h = c01.pwl_shift(f, shift * t)
        mu_t = c01.atom_measure(
            (s, a * (float(f(s)) + shift * t)) for s, a in zip(pts, alph)
        )
        return GraphPair(h, mu_t)

    query = CoderivativeQuery(space, GraphPair(f, mu), candidate=lam)
    curve = ProbeCurve(f"thm55:shift[{shift:+.0f}]", gen, t_max=t_max)
    return Witness("thm55", query, curve, abs(mass) / 2.0)


def _shared_peaks(f: c01.PwlFunction, u: c01.PwlFunction, params: dict) -> list:
    norm_u = c01.sup_norm(u)
    if params.get("points") is not None:
        pts = [float(s) for s in params["points"]]
        mset = c01.maximizing_set(f)
        for s in pts:
            _require(
                mset.contains(s) and abs(float(u(s)) - norm_u) <= 1e-9 * max(1.0, norm_u),
                "points lie in M(u) and M(f)",
            )
        return pts
    pts = [
        s
        for s in c01.peak_points(f, 1)
        if abs(float(u(s)) - norm_u) <= c01.VALUE_TOL * max(1.0, norm_u)
    ]
    _require(bool(pts), "M(u) and M(f) share a point")
    return pts


def _thm56(space: c01.C01Space, params: dict) -> Witness:
    f = serialize.pwl_from_json(params["f"])
    u = serialize.pwl_from_json(params["u"])
    _require(bool(np.all(f.values >= 0.0)), "f in C+[0,1]")
    _require(bool(np.all(u.values >= 0.0)), "u in C+[0,1]")
    norm_f, norm_u = c01.sup_norm(f), c01.sup_norm(u)
    _require(norm_f > 0.0, "||f|| > 0")
    _require(norm_u > norm_f, "||u|| > ||f||")
    pts = _shared_peaks(f, u, params)
    alph = params.get("alphas")
    alph = [1.0 / len(pts)] * len(pts) if alph is None else [float(a) for a in alph]
    mu = c01.atomic_duality_measure(f, pts, alph)
    lam = c01.atomic_duality_measure(u, pts, alph)

    def gen(t: float) -> GraphPair:
        h = c01.pwl_shift(f, t)
        mu_t = c01.atom_measure((s, a * (float(f(s)) + t)) for s, a in zip(pts, alph))
        return GraphPair(h, mu_t)

    query = CoderivativeQuery(space, GraphPair(f, mu), candidate=lam, second_dual=f)
    curve = ProbeCurve("thm56:shift[+1]", gen, t_max=1.0)
    return Witness("thm56", query, curve, (norm_u - norm_f) / 2.0)


def _cor57(space: c01.C01Space, params: dict) -> Witness:
    f = serialize.pwl_from_json(params["f"])
    u = serialize.pwl_from_json(params["u"])
    _require(bool(np.all(f.values >= 0.0)), "f in C+[0,1]")
    _require(bool(np.all(u.values >= 0.0)), "u in C+[0,1]")
    _require(bool(np.all(np.diff(f.values) >= 0.0)), "f increasing")
    _require(bool(np.all(np.diff(u.values) >= 0.0)), "u increasing")
    _require(float(f(1.0)) > 0.0, "f(1) > 0")
    _require(float(u(1.0)) > float(f(1.0)), "u(1) > f(1)")
    # Increasing nonnegative functions peak at the right endpoint; this is a
    # thm56 instance with the endpoint atoms mu = f(1) delta_1, lambda = u(1) delta_1.
    witness = _thm56(space, {"f": f, "u": u, "points": [1.0], "alphas": [1.0]})
    return Witness("cor57", witness.query, witness.curve, witness.claimed_bound)


def _thm58(space: c01.C01Space, params: dict) -> Witness:
    f = serialize.pwl_from_json(params["f"])
    c = float(params["c"])
    _require(bool(np.all(f.values >= 0.0)), "f in C+[0,1]")
    norm = c01.sup_norm(f)
    _require(norm > 0.0, "||f|| > 0")
    _require(c > 0.0, "c > 0")
    _require(c != 1.0, "c != 1")
    mu = _resolve_measure(params, "mu", f)
    s = 1.0 if c > 1.0 else -1.0

    def gen(t: float) -> GraphPair:
        scale = 1.0 + s * t
        return GraphPair(c01.pwl_scale(f, scale), c01.measure_scale(mu, scale))

    query = CoderivativeQuery(
        space, GraphPair(f, mu), candidate=c01.measure_scale(mu, c), second_dual=f
    )
    curve = ProbeCurve(f"thm58:scale[{s:+.0f}]", gen, t_max=0.5)
    return Witness("thm58", query, curve, abs(c - 1.0) * norm / 2.0)


_CATALOG = {
    "thm31": (lp.LpSpace, _thm31),
    "thm32": (lp.LpSpace, _thm32),
    "thm33": (lp.LpSpace, _thm33),
    "thm45_case1": (l1.FiniteMeasureSpace, _thm45_case1),
    "thm45_case2": (l1.FiniteMeasureSpace, _thm45_case2),
    "thm46": (l1.FiniteMeasureSpace, _thm46),
    "thm47": (l1.FiniteMeasureSpace, _thm47),
    "cor48": (l1.FiniteMeasureSpace, _cor48),
    "thm53": (c01.C01Space, _thm53),
    "thm54": (c01.C01Space, _thm54),
    "thm55": (c01.C01Space, _thm55),
    "thm56": (c01.C01Space, _thm56),
    "cor57": (c01.C01Space, _cor57),
    "thm58": (c01.C01Space, _thm58),
}

THEOREM_IDS = tuple(_CATALOG)


def build_witness(space, theorem_id: str, params: dict) -> Witness:
    """Build the catalog witness ``theorem_id`` for the given space and params."""
    if theorem_id not in _CATALOG:
        raise KeyError(f"unknown theorem id: {theorem_id}")
    space_type, builder = _CATALOG[theorem_id]
    if not isinstance(space, space_type):
        raise HypothesisViolation(
            f"{theorem_id} lives in the {space_type.__name__} model"
        )
    return builder(space, dict(params))
