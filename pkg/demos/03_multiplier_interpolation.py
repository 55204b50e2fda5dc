"""
Bounded data: the multiplier interpolant
========================================

The interpolant is stored as a short sum of Cauchy kernels
``sum y_k / (1 - conj(a_k) z)``. The Blaschke-product form is available
as ``direct`` for cross-checking.
"""

import numpy as np

from freeinterp import (
    build_multiplier_interpolant,
    carleson_delta,
    check_y_bound,
    sigma_alpha,
    verify_interpolation,
)

a = np.array([0.5, -0.5])
x = np.array([1.0, 0.0])
f = build_multiplier_interpolant(a, x)
print("y    =", f.y)             # [1.171875, -0.703125]
print("f(0) =", f(0.0))          # 0.46875
print("residuals:", verify_interpolation(f).residuals)

rng = np.random.default_rng(7)
a = 0.9 * np.sqrt(rng.random(8)) * np.exp(2j * np.pi * rng.random(8))
x = np.exp(2j * np.pi * rng.random(8))
f = build_multiplier_interpolant(a, x)
z = 0.95 * np.exp(1j * np.linspace(0, 2 * np.pi, 5))
print("two forms differ by", np.max(np.abs(f(z) - f.direct(z))))
print("max residual", verify_interpolation(f).max_residual)

# every coefficient obeys |y_k| <= (sigma_1/delta^2) ||x|| (1 - |a_k|^2)
rep = check_y_bound(a, x, f.y, sigma_alpha(a, 1.0).upper, carleson_delta(a))
print("coefficient bound holds:", rep.all_hold, " smallest margin", rep.min_margin)
