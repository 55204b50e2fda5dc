"""Reference computations that share no code with the package under test."""

import numpy as np
from numpy.polynomial import polynomial as P


def direct_form_polynomials(a, x):
    """Numerator and denominator coefficients (ascending) of the multiplier interpolant.

    With ``b_k(z) = (|a_k|/a_k)(z - a_k)/(1 - conj(a_k) z)`` the direct form is

        f(z) = sum_n c_n prod_{k != n} (|a_k|/a_k)(z - a_k) / prod_k (1 - conj(a_k) z),

    where ``c_n = (1 - |a_n|^2) x_n / B_n(a_n)``; ``B_n(a_n)`` is evaluated by
    brute-force products here.
    """
    a = np.asarray(a, dtype=complex)
    x = np.asarray(x, dtype=complex)
    n = a.size
    unit = np.abs(a) / a
    den = np.array([1.0 + 0j])
    for ak in a:
        den = P.polymul(den, [1.0, -np.conj(ak)])
    num = np.zeros(n, dtype=complex)
    for i in range(n):
        bnn = 1.0 + 0j
        poly = np.array([1.0 + 0j])
        for k in range(n):
            if k == i:
                continue
            bnn *= unit[k] * (a[i] - a[k]) / (1.0 - np.conj(a[k]) * a[i])
            poly = P.polymul(poly, unit[k] * np.array([-a[k], 1.0]))
        c = (1.0 - abs(a[i]) ** 2) * x[i] / bnn
        num[: poly.size] += c * poly
    return num, den


def residue_coefficients(a, x):
    """Coefficients ``y_k`` of ``f = sum_k y_k / (1 - conj(a_k) z)`` from residues.

    At the simple pole ``p_k = 1/conj(a_k)`` the residue of ``N/D`` is
    ``N(p)/D'(p)``, and ``res/(z - p) = -conj(a_k) res / (1 - conj(a_k) z)``.
    """
    a = np.asarray(a, dtype=complex)
    num, den = direct_form_polynomials(a, x)
    dden = P.polyder(den)
    p = 1.0 / np.conj(a)
    res = P.polyval(p, num) / P.polyval(p, dden)
    return -np.conj(a) * res


def direct_form_value(a, x, z):
    num, den = direct_form_polynomials(a, x)
    return P.polyval(z, num) / P.polyval(z, den)


def midpoint_disk_integral(g, alpha, nr=1500, nt=1500):
    """Midpoint rule for int_0^1 int |g(r e^{it})| (1-r)^(alpha-1) dt dr after u = (1-r)^alpha."""
    u = (np.arange(nr) + 0.5) / nr
    r = 1.0 - u ** (1.0 / alpha)
    t = -np.pi + 2.0 * np.pi * (np.arange(nt) + 0.5) / nt
    z = r[:, None] * np.exp(1j * t[None, :])
    return float(np.abs(g(z)).sum() * (1.0 / nr) * (2.0 * np.pi / nt) / alpha)


def random_disk_points(rng, n, radius=0.95):
    return radius * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))


def random_admissible_nodes(rng, n, radius=0.95, min_delta=1e-3):
    """Rejection-sampled separated nodes, computed with plain loops."""
    while True:
        a = random_disk_points(rng, n, radius)
        if np.min(np.abs(a)) < 1e-3:
            continue
        delta = min(
            np.prod([abs(a[k] - a[m]) / abs(1 - np.conj(a[k]) * a[m]) for k in range(n) if k != m])
            for m in range(n)
        ) if n > 1 else 1.0
        if delta >= min_delta:
            return a
