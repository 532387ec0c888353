"""Appendix property battery and the independent oracles, across backends.

The battery checks the classical duality-map properties on seeded random
instances: identity in the Hilbert case (J2), zero at zero (J3), homogeneity
(J4), monotonicity (J5), and the two-sided norm inequality (J6).  The
finite-difference oracle cross-checks the sequence-model formula against the
gradient of half the squared norm.
"""

import numpy as np

from dualitymap import (
    C01Space,
    FiniteMeasureSpace,
    LpSpace,
    duality_map,
    gradient_oracle_lp,
    run_appendix_battery,
)

for space in (LpSpace(2.0), LpSpace(3.0), FiniteMeasureSpace([1.0, 0.5, 2.0]), C01Space()):
    report = run_appendix_battery(space, sample_count=100, seed=7)
    print(f"\nbattery on {report.space}:")
    for rec in report.records:
        tag = "pass" if rec.passed else "FAIL"
        note = "" if rec.applicable else "  (not applicable)"
        print(f"  {rec.property_id}: {tag}  max violation {rec.max_violation:.3e}{note}")

print("\nfinite-difference oracle vs duality map (p = 3):")
rng = np.random.default_rng(7)
x = rng.uniform(0.5, 3.0, 5) * rng.choice([-1.0, 1.0], 5)
oracle = gradient_oracle_lp(x, 3.0, step=1e-5)
jx = duality_map(x, 3.0)
print("  max coordinate gap:", float(np.max(np.abs(jx - oracle.values))))

print("\noracle flags coordinates too close to zero when p < 2:")
oracle = gradient_oracle_lp([1e-7, 1.0], 1.5, step=1e-5)
print("  flagged:", oracle.flagged, " values:", oracle.values)
