"""Upper bounds on the multiplier norm of the bounded-data interpolant.

For a multiplier ``f`` and exponent ``alpha`` the norm is the supremum over
``|xi| = 1`` of ``||g_xi||_{F_alpha}`` with test functions
``g_xi(z) = f(z) (1 - conj(xi) z)^(-alpha)``. Each ``g_xi`` is bounded by

    |f(0)| + (2/alpha) ||g_xi'||_{F_{alpha+1}},

and ``g_xi' = h_xi + alpha conj(xi) f (1 - conj(xi) z)^(-alpha-1)`` with
``h_xi = f' (1 - conj(xi) z)^(-alpha)``. The first piece is bounded by the
area functional, ``(alpha/2 pi) Omega_alpha(h_xi)``; the second by
``alpha ||f||_{m_1} <= 2 alpha (sigma_1/delta)^2 ||x||_inf``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .conditions import ConditionReport, SigmaResult, sigma_alpha
from .disk_core import BoundaryPoint, DomainError, principal_power, stable_kernel_modulus
from .interpolation import MultiplierInterpolant
from .quadrature import QuadratureSpec, adaptive_disk_integral

DEFAULT_XI_GRID = 512
#: |f'| has kinks at the zeros of f', which caps Gauss convergence near 1e-5
BOUND_QUAD = QuadratureSpec(radial_panels=20, gauss_order=6, rel_tol=1e-4)


def test_function(f, xi, alpha: float):
    """``g(z) = f(z) (1 - conj(xi) z)^(-alpha)``."""
    xi = BoundaryPoint(complex(xi)).value

    def g(z):
        z = np.asarray(z, dtype=complex)
        return f(z) * principal_power(1.0 - np.conj(xi) * z, -alpha)

    return g


test_function.__test__ = False  # not a pytest test


def g_prime_decomposition(f: MultiplierInterpolant, xi, alpha: float):
    """The two summands ``(h, second)`` of the derivative of the test function.

    ``h(z) = f'(z) (1 - conj(xi) z)^(-alpha)`` and
    ``second(z) = alpha conj(xi) f(z) (1 - conj(xi) z)^(-alpha-1)``.
    """
    xi = BoundaryPoint(complex(xi)).value

    def h(z):
        z = np.asarray(z, dtype=complex)
        return f.derivative(z) * principal_power(1.0 - np.conj(xi) * z, -alpha)

    def second(z):
        z = np.asarray(z, dtype=complex)
        return alpha * np.conj(xi) * f(z) * principal_power(1.0 - np.conj(xi) * z, -alpha - 1.0)

    return h, second


def m1_norm_bound(report: ConditionReport, sup_x: float, sigma1: float | None = None) -> float:
    """``2 (sigma_1/delta)^2 ||x||_inf`` using the certified upper ``sigma_1``."""
    if sigma1 is None:
        if report.alpha != 1:
            raise DomainError("report is not at exponent 1; pass sigma1 explicitly")
        sigma1 = report.sigma.upper
    return 2.0 * (sigma1 / report.delta) ** 2 * sup_x


@dataclass(frozen=True)
class XiTerm:
    xi: complex
    g0_term: float
    omega_h: float
    omega_h_term: float
    second_term: float
    total: float
    converged: bool

    def to_dict(self) -> dict:
        return {
            "xi": [self.xi.real, self.xi.imag],
            "theta": float(np.angle(self.xi)),
            "g0_term": self.g0_term,
            "omega_h": self.omega_h,
            "omega_h_term": self.omega_h_term,
            "second_term": self.second_term,
            "total": self.total,
            "converged": self.converged,
        }


@dataclass
class BoundReport:
    alpha: float
    sup_bound: float
    per_xi: list[XiTerm]
    constants: dict
    closed_form_bound: float
    closed_form_bound_sigma1: float
    flags: list[str] = field(default_factory=list)
    excluded: list[complex] = field(default_factory=list)

    @property
    def all_converged(self) -> bool:
        return all(t.converged for t in self.per_xi)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "sup_bound": self.sup_bound,
            "closed_form_bound": self.closed_form_bound,
            "closed_form_bound_sigma1": self.closed_form_bound_sigma1,
            "constants": dict(self.constants),
            "all_converged": self.all_converged,
            "flags": list(self.flags),
            "excluded": [[x.real, x.imag] for x in self.excluded],
            "per_xi": [t.to_dict() for t in self.per_xi],
        }


def _omega_h(f: MultiplierInterpolant, xi: complex, alpha: float, q: QuadratureSpec):
    a = f.nodes.nodes

    def F(r, s, theta):
        z = r * np.exp(1j * theta)
        return np.abs(f.derivative(z)) * stable_kernel_modulus(xi, r, s, theta) ** (-alpha)

    return adaptive_disk_integral(F, alpha, q, peaks=[xi, *a])


def xi_grid_points(n: int) -> np.ndarray:
    """``exp(2 pi i j / n)``; grids of size ``n`` and ``2n`` are nested."""
    return np.exp(2j * np.pi * np.arange(n) / n)


def multiplier_norm_bound(
    f: MultiplierInterpolant,
    alpha: float,
    conditions: ConditionReport,
    e_hat: float,
    xi_grid: int = DEFAULT_XI_GRID,
    q: QuadratureSpec | None = None,
    sigma1: SigmaResult | None = None,
    workers: int = 1,
) -> BoundReport:
    """Sup over a boundary grid of the per-``xi`` upper bound on ``||g_xi||_{F_alpha}``.

    Parameters
    ----------
    f : MultiplierInterpolant
    alpha : float
        Exponent in ``(0, 1)``.
    conditions : ConditionReport
        Separation constant and certified ``sigma_alpha`` of the nodes.
    e_hat : float
        Empirical kernel-integral constant (see
        :func:`freeinterp.transforms.estimate_kernel_constant`); only used
        for the closed-form comparison bound ``(6 + 2 e_hat)(sigma_alpha/delta)^2 ||x||``.
    xi_grid : int
        Number of equally spaced boundary points.
    sigma1 : SigmaResult, optional
        Certified ``sigma_1``; computed on the grid of ``conditions`` if omitted.
    workers : int
        Threads for the per-``xi`` quadratures. The result does not depend on it.
    """
    if not 0 < alpha < 1:
        raise DomainError("the quadrature pipeline covers 0 < alpha < 1; use m1_norm_bound at alpha = 1")
    if abs(conditions.alpha - alpha) > 0:
        raise DomainError("condition report was computed for a different alpha")
    q = q or BOUND_QUAD
    if sigma1 is None:
        sigma1 = sigma_alpha(f.nodes, 1.0, conditions.sigma.grid_size)
    delta = conditions.delta
    sup_x = f.sup_target
    s1 = sigma1.upper
    sa = conditions.sigma.upper

    g0 = abs(complex(f(0.0)))
    second_term = (2.0 / alpha) * 2.0 * alpha * (s1 / delta) ** 2 * sup_x
    xis = xi_grid_points(xi_grid)

    if sup_x == 0:
        results = [None] * xi_grid
    elif workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(lambda x: _omega_h(f, x, alpha, q), xis))
    else:
        results = [_omega_h(f, x, alpha, q) for x in xis]

    per_xi, flags, excluded = [], [], []
    for x, res in zip(xis, results):
        om, ok = (0.0, True) if res is None else (res.value, res.converged)
        om_term = (2.0 / alpha) * (alpha / (2.0 * math.pi)) * om
        total = g0 + om_term + second_term
        if not ok:
            flags.append(f"quadrature not converged at theta={np.angle(x):.6f}")
        if not math.isfinite(total):
            excluded.append(complex(x))
            flags.append(f"DIVERGENT: excluded theta={np.angle(x):.6f} from the supremum")
        per_xi.append(XiTerm(complex(x), g0, om, om_term, second_term, total, ok))

    finite = [t.total for t in per_xi if math.isfinite(t.total)]
    sup_bound = max(finite) if finite else math.inf
    c = 6.0 + 2.0 * e_hat
    return BoundReport(
        alpha=float(alpha),
        sup_bound=float(sup_bound),
        per_xi=per_xi,
        constants={
            "sigma1": s1,
            "sigma_alpha": sa,
            "delta": delta,
            "E_hat": float(e_hat),
            "C": c,
            "sup_x": sup_x,
            "m1_bound": 2.0 * (s1 / delta) ** 2 * sup_x,
        },
        closed_form_bound=c * (sa / delta) ** 2 * sup_x,
        closed_form_bound_sigma1=c * (s1 / delta) ** 2 * sup_x,
        flags=flags,
        excluded=excluded,
    )


# name used by the documented interface
vinogradov_m1_bound = m1_norm_bound


def sampled_sup_norm(f, n: int = 1000, radius: float = 0.99, seed: int = 0) -> float:
    """Max of ``|f|`` over ``n`` random points of the disk of the given radius."""
    rng = np.random.default_rng(seed)
    z = radius * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))
    return float(np.max(np.abs(f(z))))
