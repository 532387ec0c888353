"""Non-membership certificates for the coderivative of the duality mapping.

A candidate z* belongs to the coderivative value only when the difference
quotient stays nonpositive in the limit along *every* curve in gph J
approaching the base point.  One probe curve with a positive quotient limit
therefore disproves membership.  The witness catalog packages the exact
curve constructions with their closed-form limits; this demo runs a few and
inspects the sampled quotients.
"""

import numpy as np

from dualitymap import (
    C01Space,
    FiniteMeasureSpace,
    GraphPair,
    LpSpace,
    ProbeCurve,
    build_witness,
    certify_nonmembership,
    falsify_membership_search,
    reverify_certificate,
)

# scaled-candidate witness in the Hilbert sequence model: a J(x) with a = 3
space = LpSpace(2.0)
witness = build_witness(space, "thm33", {"x": [1.0, 0.0], "a": 3.0})
cert = certify_nonmembership(witness.query, witness.curve, witness.claimed_bound)
print("thm33 (a = 3, x = (1,0)):")
print("  claimed bound   :", cert.claimed_bound)
print("  sampled quotients (first 4):", [round(q, 12) for q in cert.estimate.quotients[:4]])
print("  estimated limit :", cert.estimate.limit)
print("  verdict         :", cert.verdict)
print("  re-verifies from stored samples:", reverify_certificate(cert))

# indicator-bump witness at the origin of the L1 model
ms = FiniteMeasureSpace([1.0, 1.0])
witness = build_witness(ms, "thm46", {"k_star": [1.0, 0.0], "D": [0]})
cert = certify_nonmembership(witness.query, witness.curve, witness.claimed_bound)
print("\nthm46 (k* = (1,0), D = {0}): limit", cert.estimate.limit, "->", cert.verdict)

# shift witness in C[0,1] against a mass-carrying candidate
c01 = C01Space()
witness = build_witness(
    c01,
    "thm55",
    {
        "f": {"breakpoints": [0.0, 0.5, 1.0], "values": [0.0, 1.0, 0.0]},
        "lambda": {"atoms": [], "density": {"breakpoints": [0.0, 1.0], "values": [1.0]}},
    },
)
cert = certify_nonmembership(witness.query, witness.curve, witness.claimed_bound)
print("thm55 (lambda = Lebesgue): limit", cert.estimate.limit, "->", cert.verdict)

# exploratory search: the proof's branch beats its sign-flipped twin
x = np.array([1.0, 0.0])
witness = build_witness(space, "thm32", {"x": x, "y": x})
flipped = ProbeCurve("wrong-branch", lambda t: GraphPair((1 + t) * x, (1 + t) * x), 0.5)
lead = falsify_membership_search(witness.query, [witness.curve, flipped])
print("\nfalsification search over {proof branch, flipped twin}:")
for cid, est in lead.estimates.items():
    print(f"  {cid:22s} limit = {est.limit:+.6f}")
print("  best direction:", lead.curve_id)
