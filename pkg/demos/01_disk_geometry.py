"""
Blaschke factors and the pseudo-hyperbolic distance
===================================================

A Blaschke factor vanishes at its node and has modulus one on the circle.
The pseudo-hyperbolic distance does not change under disk automorphisms.
"""

import numpy as np

from freeinterp import blaschke_factor, principal_power, pseudo_hyperbolic

a = 0.6 + 0.3j
print("b_a(a)        =", blaschke_factor(a, a))
print("b_a(0)        =", blaschke_factor(0.0, a), " (equals -|a| =", -abs(a), ")")

theta = np.linspace(0, 2 * np.pi, 7)
print("|b_a| on |z|=1:", np.round(np.abs(blaschke_factor(np.exp(1j * theta), a)), 15))

# move two points with an automorphism and compare distances
z, w, b = 0.2 - 0.5j, -0.7 + 0.1j, 0.4j
phi = lambda v: np.exp(0.8j) * (v - b) / (1 - np.conj(b) * v)
print("rho(z, w)           =", pseudo_hyperbolic(z, w))
print("rho(phi(z), phi(w)) =", pseudo_hyperbolic(phi(z), phi(w)))

# principal powers live on the right half-plane
print("(1+1j)^0.5 =", principal_power(1 + 1j, 0.5))
