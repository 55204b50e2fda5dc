"""
The weighted area functional and the kernel constant
====================================================

``omega`` integrates ``|f|`` against ``(1 - r)^(alpha - 1)`` over the disk.
Constants and ``z`` have closed forms, which makes them a calibration check.
"""

import math

import numpy as np

from freeinterp import (
    RationalFamily,
    default_kernel_samples,
    estimate_kernel_constant,
    f_alpha_bound_via_derivative,
    kernel_integral_ratio,
    omega,
)

for alpha in (0.25, 0.5, 1.0):
    one = omega(lambda z: np.ones_like(z), alpha).value
    print(f"alpha={alpha}: Omega(1) = {one:.15f}  vs 2 pi/alpha = {2 * math.pi / alpha:.15f}")

# a single kernel has norm one; the derivative route gives an upper bound
k = RationalFamily(0.5, [0.9j], [1.0])
b = f_alpha_bound_via_derivative(k, k.derivative(), 0.5, peaks=[0.9j])
print("bound for a kernel of norm 1:", b.total)

# the double kernel integral against its closed-form majorant
print(kernel_integral_ratio(0.0, 1.0, 0.5))
est = estimate_kernel_constant(default_kernel_samples(), 0.5)
print(f"E_hat(0.5) = {est.value:.6f} from {est.n_quadratures} quadratures")

# at alpha = 1 the ratio keeps growing as z approaches -xi
for k in (1, 2, 3):
    print(1 - 10.0**-k, kernel_integral_ratio(1 - 10.0**-k, -1.0, 1.0).ratio)
