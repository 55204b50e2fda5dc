"""
Upper bound on the multiplier norm
==================================

The bound is a supremum over boundary points ``xi`` of a per-``xi``
estimate. The report keeps every term, and also the closed-form comparison
``(6 + 2 E_hat)(sigma_alpha/delta)^2 ||x||``.
"""

import numpy as np

from freeinterp import (
    build_multiplier_interpolant,
    check_conditions,
    multiplier_norm_bound,
    sampled_sup_norm,
)

a = np.array([0.5, -0.5, 0.6j])
x = np.array([1.0, -1.0, 0.5j])
f = build_multiplier_interpolant(a, x)
alpha = 0.5
report = multiplier_norm_bound(f, alpha, check_conditions(a, alpha), e_hat=13.3302, xi_grid=16)

print("sup bound         ", report.sup_bound)
print("closed-form bound ", report.closed_form_bound)
print("sampled max |f|   ", sampled_sup_norm(f))
print("all converged     ", report.all_converged)
worst = max(report.per_xi, key=lambda t: t.total)
print("worst xi at theta", np.angle(worst.xi), worst.to_dict())

# the bound scales linearly with the data
twice = multiplier_norm_bound(f.scaled(2.0), alpha, check_conditions(a, alpha), 13.3302, xi_grid=16)
print("ratio for doubled data:", twice.sup_bound / report.sup_bound)
