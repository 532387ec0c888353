"""Maximizing sets and duality measures in the piecewise-linear C[0,1] model.

Members of J(f) are measures supported on the maximizing set
M(f) = {s : |f(s)| = ||f||}: atomic measures weighted by alpha_j f(s_j) on
points of M(f), and a uniform density on a plateau where f sits at +||f||.
"""

import numpy as np

from dualitymap import (
    PwlFunction,
    atomic_duality_measure,
    is_duality_member_c,
    maximizing_set,
    pairing_c,
    plateau_duality_measure,
    pwl_scale,
    pwl_tent,
    sup_norm,
    tv_norm,
)
from dualitymap.c01 import atom_measure

tent = pwl_tent()
print("tent function: peak 1 at s = 0.5")
print("  ||f|| =", sup_norm(tent), " M(f) =", maximizing_set(tent))

mu = atomic_duality_measure(tent, [0.5])
print("  atomic member of J(f):", mu)
print("  tv norm =", tv_norm(mu), " pairing =", pairing_c(mu, tent), "= ||f||^2")

# a measure supported off M(f) fails both the test and the support condition
bad = atom_measure([(0.25, 1.0)])
print("  atom at 0.25 instead:", is_duality_member_c(bad, tent))

# two-sided maximizer: |f| = 1 at both endpoints with opposite signs
seesaw = PwlFunction(np.array([0.0, 1.0]), np.array([1.0, -1.0]))
print("\nseesaw (1 at 0, -1 at 1): M(f) =", maximizing_set(seesaw))
nu = atomic_duality_measure(seesaw, [0.0, 1.0], [0.5, 0.5])
print("  signed atomic member:", nu, "->", is_duality_member_c(nu, seesaw))

# plateau: the density member
flat = PwlFunction(np.array([0.0, 0.25, 0.75, 1.0]), np.array([0.0, 2.0, 2.0, 0.0]))
print("\nplateau at 2 on [0.25, 0.75]: M(f) =", maximizing_set(flat))
rho = plateau_duality_measure(flat, 0.25, 0.75)
print("  density member:", rho)
print("  tv =", tv_norm(rho), " pairing =", pairing_c(rho, flat), "= ||f||^2")

# the maximizing set is scaling-invariant
for t in (-2.0, 0.5, 3.0):
    print(f"  M({t}*f) == M(f):", maximizing_set(pwl_scale(flat, t)).same_set(maximizing_set(flat)))
