"""
Summable data: the weighted interpolant
=======================================

For ``0 < alpha <= 1`` the interpolant matches ``g(a_k)(1 - |a_k|^2)^alpha = x_k``.
Its trace on the nodes is controlled by sigma.
"""

import numpy as np

from freeinterp import (
    DiscreteMeasure,
    FractionalTransform,
    build_f_alpha_interpolant,
    forward_trace,
    sigma_alpha,
)

rng = np.random.default_rng(3)
a = 0.9 * np.sqrt(rng.random(6)) * np.exp(2j * np.pi * rng.random(6))
x = rng.normal(size=6) + 1j * rng.normal(size=6)

for alpha in (0.25, 0.5, 1.0):
    g = build_f_alpha_interpolant(a, x, alpha)
    print(f"alpha={alpha}: max trace error {np.max(np.abs(g.trace() - x)):.1e}")

# the other direction: a transform of a discrete measure restricted to the nodes
mu = DiscreteMeasure.from_atoms([(1.0, 2.0), (1j, -1.0), (np.exp(2.5j), 0.5j)])
t = FractionalTransform(0.5, mu)
tr = forward_trace(t, a)
print("l1 trace", tr.l1_sum, "<= ||mu|| sigma =", mu.norm * sigma_alpha(a, 0.5).upper)
