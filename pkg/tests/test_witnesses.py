"""Witness catalog tests: hand-checked bounds, hypothesis guards, random draws."""

import numpy as np
import pytest

from dualitymap import (
    C01Space,
    FiniteMeasureSpace,
    HypothesisViolation,
    LpSpace,
    Schedule,
    build_witness,
    certify_nonmembership,
    estimate_limit,
)
from witness_draws import CLOSED_FORM_DRAWS, stable_seed


def run(space, theorem, params, schedule=None):
    witness = build_witness(space, theorem, params)
    cert = certify_nonmembership(witness.query, witness.curve, witness.claimed_bound, schedule)
    return witness, cert


def test_hand_checked_bounds():
    _, cert = run(LpSpace(2.0), "thm33", {"x": [1.0, 0.0], "a": 3.0})
    assert cert.claimed_bound == pytest.approx(1.0)
    assert cert.estimate.limit == pytest.approx(1.0, abs=1e-12)

    _, cert = run(FiniteMeasureSpace([1.0, 1.0]), "thm46", {"k_star": [1.0, 0.0], "D": [0]})
    assert cert.claimed_bound == pytest.approx(0.5)
    assert cert.estimate.limit == pytest.approx(0.5, abs=1e-12)

    _, cert = run(
        FiniteMeasureSpace([1.0, 1.0]),
        "thm47",
        {"f": [2.0, 1.0], "D": [0], "a": 1.5},
    )
    assert cert.claimed_bound == pytest.approx(3.0)  # = ||f||_1
    assert cert.estimate.limit == pytest.approx(3.0, abs=1e-12)

    _, cert = run(
        C01Space(),
        "thm53",
        {
            "f": {"breakpoints": [0.0, 1.0], "values": [1.0, 1.0]},
            "selection": {"type": "plateau", "a": 0.0, "b": 1.0},
        },
    )
    assert cert.claimed_bound == pytest.approx(0.5)  # = ||f|| / 2
    assert cert.verdict == "certified"


def test_thm58_plateau_example():
    _, cert = run(
        C01Space(),
        "thm58",
        {
            "f": {"breakpoints": [0.0, 1.0], "values": [1.0, 1.0]},
            "selection": {"type": "plateau", "a": 0.0, "b": 1.0},
            "c": 2.0,
        },
    )
    assert cert.estimate.limit == pytest.approx(0.5, abs=1e-12)
    assert cert.verdict == "certified"


def test_hypothesis_guards():
    with pytest.raises(HypothesisViolation, match="c != 1"):
        build_witness(
            C01Space(),
            "thm58",
            {"f": {"breakpoints": [0.0, 1.0], "values": [1.0, 1.0]}, "c": 1.0},
        )
    with pytest.raises(HypothesisViolation, match="<J\\(x\\), y> != 0"):
        build_witness(LpSpace(2.0), "thm32", {"x": [1.0, 0.0], "y": [0.0, 1.0]})
    with pytest.raises(HypothesisViolation, match="nonempty"):
        build_witness(FiniteMeasureSpace([1.0, 1.0]), "thm46", {"k_star": [1.0, 0.0], "D": []})
    with pytest.raises(HypothesisViolation, match="one strict sign"):
        build_witness(FiniteMeasureSpace([1.0, 1.0]), "thm46", {"k_star": [1.0, -1.0], "D": [0, 1]})
    with pytest.raises(HypothesisViolation, match="share a point"):
        build_witness(
            C01Space(),
            "thm56",
            {
                "f": {"breakpoints": [0.0, 0.5, 1.0], "values": [0.0, 1.0, 0.0]},
                "u": {"breakpoints": [0.0, 1.0], "values": [2.0, 0.0]},
            },
        )
    with pytest.raises(HypothesisViolation, match="increasing"):
        build_witness(
            C01Space(),
            "cor57",
            {
                "f": {"breakpoints": [0.0, 0.5, 1.0], "values": [0.0, 1.0, 0.5]},
                "u": {"breakpoints": [0.0, 1.0], "values": [0.0, 2.0]},
            },
        )
    with pytest.raises(HypothesisViolation, match="strictly positive"):
        build_witness(
            FiniteMeasureSpace([1.0, 1.0]),
            "cor48",
            {"f": [1.0, 0.0], "u_star": [3.0, 3.0]},
        )
    with pytest.raises(KeyError):
        build_witness(LpSpace(2.0), "thm99", {})
    with pytest.raises(HypothesisViolation, match="model"):
        build_witness(LpSpace(2.0), "thm46", {"k_star": [1.0], "D": [0]})


@pytest.mark.parametrize("theorem", sorted(CLOSED_FORM_DRAWS))
def test_random_draws_match_closed_form(theorem):
    rng = np.random.default_rng(stable_seed(theorem))
    for _ in range(5):
        space, params, expected = CLOSED_FORM_DRAWS[theorem](rng)
        witness, cert = run(space, theorem, params)
        assert witness.claimed_bound == pytest.approx(expected, rel=1e-9, abs=1e-12)
        assert cert.verdict == "certified"
        assert cert.estimate.limit == pytest.approx(expected, abs=1e-5)


@pytest.mark.parametrize("theorem", sorted(CLOSED_FORM_DRAWS))
def test_reparametrization_invariance(theorem):
    rng = np.random.default_rng(stable_seed(theorem) + 1)
    space, params, _ = CLOSED_FORM_DRAWS[theorem](rng)
    witness = build_witness(space, theorem, params)
    t0 = min(0.25, witness.curve.t_max / 2.0)
    est_a = estimate_limit(witness.query, witness.curve, Schedule(t0, 0.5, 24))
    est_b = estimate_limit(witness.query, witness.curve, Schedule(t0 / 3.0, 0.7, 40))
    assert est_a.limit == pytest.approx(est_b.limit, abs=1e-5)


def test_thm31_reparametrization_invariance():
    # smooth regime: every coordinate of x nonzero
    rng = np.random.default_rng(59)
    for p in (1.5, 2.0, 3.0):
        space = LpSpace(p)
        x = rng.uniform(0.5, 3.0, 4) * rng.choice([-1.0, 1.0], 4)
        w = rng.uniform(-2.0, 2.0, 4)
        witness = build_witness(space, "thm31", {"x": x, "w": w})
        est_a = estimate_limit(witness.query, witness.curve, Schedule(0.25, 0.5, 24))
        est_b = estimate_limit(witness.query, witness.curve, Schedule(0.25 / 3, 0.7, 40))
        assert est_a.limit == pytest.approx(est_b.limit, abs=1e-5)


def test_thm31_closed_form_cases():
    # at the origin the bound is |w_m| / 2 for every exponent
    for p in (1.2, 2.0, 3.5):
        witness, cert = run(LpSpace(p), "thm31", {"x": [0.0, 0.0, 0.0], "w": [0.0, -0.8, 0.3]})
        assert cert.claimed_bound == pytest.approx(0.4)
        assert cert.estimate.limit == pytest.approx(0.4, abs=1e-12)
        assert cert.verdict == "certified"

    # Hilbert case: bound |w_m| / 2 at any base point
    witness, cert = run(LpSpace(2.0), "thm31", {"x": [1.0, 2.0], "w": [3.0, -1.0]})
    assert cert.estimate.limit == pytest.approx(1.5, abs=1e-12)
    assert cert.verdict == "certified"


def test_thm31_general_branch_positive_and_settling():
    rng = np.random.default_rng(61)
    for p in (1.5, 3.0):
        space = LpSpace(p)
        for _ in range(5):
            dim = int(rng.integers(2, 9))
            x = rng.uniform(0.3, 3.0, dim) * rng.choice([-1.0, 1.0], dim)
            w = rng.uniform(-2.0, 2.0, dim)
            witness = build_witness(space, "thm31", {"x": x, "w": w})
            assert witness.claimed_bound is None
            est = estimate_limit(witness.query, witness.curve)
            assert all(q > 0.0 for q in est.quotients)
            head = est.quotients[:3]
            tail = est.quotients[-3:]
            assert max(tail) - min(tail) <= max(max(head) - min(head), 1e-12)


def test_thm45_case2_all_sign_variants():
    # D inside {f > a} or {f < -a}, with k* strictly negative or positive on D;
    # each instance has <k*, f> = 0 and quotient limit 1/2
    space = FiniteMeasureSpace([1.0, 1.0, 1.0])
    cases = [
        ([2.0, 1.0, -1.0], [-1.0, 1.0, -1.0]),  # f > a, k* < 0 on D
        ([2.0, -1.0, 1.0], [1.0, 1.0, -1.0]),   # f > a, k* > 0 on D
        ([-2.0, 1.0, -1.0], [-1.0, -1.0, 1.0]),  # f < -a, k* < 0 on D
        ([-2.0, 1.0, -1.0], [1.0, 0.5, -1.5]),   # f < -a, k* > 0 on D
    ]
    for f, k_star in cases:
        _, cert = run(
            space, "thm45_case2", {"f": f, "k_star": k_star, "D": [0], "a": 0.5}
        )
        assert cert.verdict == "certified"
        assert cert.estimate.limit == pytest.approx(0.5, abs=1e-12)


def test_thm46_mirrored_branch():
    _, cert = run(
        FiniteMeasureSpace([1.0, 1.0]), "thm46", {"k_star": [-1.0, 0.0], "D": [0]}
    )
    assert cert.verdict == "certified"
    assert cert.estimate.limit == pytest.approx(0.5, abs=1e-12)


def test_thm31_explicit_direction_override():
    witness = build_witness(
        LpSpace(2.0), "thm31", {"x": [1.0, 2.0], "w": [3.0, -1.0], "m": 1}
    )
    assert witness.claimed_bound == pytest.approx(0.5)
    with pytest.raises(HypothesisViolation):
        build_witness(LpSpace(2.0), "thm31", {"x": [1.0, 2.0], "w": [3.0, 0.0], "m": 1})


def test_membership_holds_along_catalog_curves():
    rng = np.random.default_rng(67)
    for theorem, draw in sorted(CLOSED_FORM_DRAWS.items()):
        space, params, _ = draw(rng)
        witness = build_witness(space, theorem, params)
        sch = Schedule(min(0.25, witness.curve.t_max / 2.0), 0.5, 12)
        for k in range(sch.steps):
            pair = witness.curve.at(sch.t0 * sch.ratio**k)
            assert space.is_member(pair.point, pair.dual, 1e-9)
