"""
Separation constant and the certified sigma supremum
====================================================

``carleson_delta`` measures how well a finite node set is separated and
``sigma_alpha`` returns a grid maximum together with a Lipschitz error bar,
so the true supremum is bracketed by ``value`` and ``upper``.
"""

import numpy as np

from freeinterp import carleson_delta, check_conditions, sigma_alpha

nodes = [0.5, -0.5]
print("delta =", carleson_delta(nodes))  # 0.8

for grid in (64, 256, 1024, 4096):
    s = sigma_alpha(nodes, 1.0, grid)
    print(f"grid {grid:5d}: value {s.value:.12f}  upper {s.upper:.12f}  error {s.certified_error:.2e}")

# a geometric sequence toward the boundary
rng = np.random.default_rng(0)
a = (1 - 2.0 ** -np.arange(1, 8)) * np.exp(2j * np.pi * rng.random(7))
report = check_conditions(a, 0.5)
print(report.to_dict()["delta"], report.sigma.value, report.admissible)
