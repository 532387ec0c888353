"""Evaluating the normalized duality mapping in the three space models.

The duality map J sends x to the dual elements u with
<u, x> = ||x||^2 = ||u||_*^2.  In the sequence model it is a single-valued
formula; in the L1 and C[0,1] models it is genuinely set-valued.
"""

import numpy as np

from dualitymap import (
    FiniteMeasureSpace,
    conjugate_exponent,
    dual_duality_map,
    duality_map,
    duality_selection,
    duality_set_classify,
    l1_norm,
    lp_norm,
    pairing,
    pairing_l1,
)

# --- the sequence model -----------------------------------------------------

x = np.array([3.0, 4.0])
print("p = 2 is the Hilbert case, where J is the identity:")
print("  J((3,4)) =", duality_map(x, 2.0))

p = 3.0
q = conjugate_exponent(p)
x = np.array([1.0, 1.0])
jx = duality_map(x, p)
print(f"\np = {p}: J((1,1)) = {jx}")
print("  <J(x), x>    =", pairing(jx, x), " (should equal ||x||_p^2 =", lp_norm(x, p) ** 2, ")")
print("  ||J(x)||_q   =", lp_norm(jx, q), " (should equal ||x||_p   =", lp_norm(x, p), ")")
print("  J*(J(x))     =", dual_duality_map(jx, q), " (the inverse map recovers x)")

# --- the finite L1 model ----------------------------------------------------

space = FiniteMeasureSpace([1.0, 1.0, 1.0])
f = np.array([2.0, 0.0, -1.0])
info = duality_set_classify(f, space)
print(f"\nL1 model, f = {f}: singleton = {info.singleton}")
print("  free points (zero set of f):", np.flatnonzero(info.free_points))
print("  canonical selection        :", info.selection)

# any value a with |a| <= ||f||_1 works on the zero set
for a in (-3.0, 0.0, 1.5, 3.0):
    sel = duality_selection(f, space, [a])
    print(
        f"  selection with a = {a:+.1f}: {sel},  <jf, f> = {pairing_l1(sel, f, space)}"
        f"  = ||f||_1^2 = {l1_norm(f, space) ** 2}"
    )
