"""Separation and Frostman-type conditions for a finite node sequence.

``carleson_delta`` is the uniform separation constant

    delta(a) = min_n prod_{k != n} |a_k - a_n| / |1 - conj(a_k) a_n|,

and ``sigma_alpha`` brackets

    sigma_alpha(a) = sup_{|xi| = 1} sum_k ((1 - |a_k|^2) / |1 - conj(xi) a_k|)^alpha

from below by a uniform grid on the circle and from above by adding a
Lipschitz error term, so ``value <= true sup <= value + certified_error``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .disk_core import DomainError, as_nodes, pseudo_hyperbolic_matrix

DEFAULT_GRID = 4096
#: sequences with a smaller separation constant are rejected for constructions
ADMISSIBLE_DELTA = 1e-6


@dataclass(frozen=True)
class SigmaResult:
    value: float
    grid_size: int
    lipschitz_bound: float
    certified_error: float
    argmax: float = 0.0  # angle of the maximizing grid point

    @property
    def upper(self) -> float:
        """Certified upper bound on the supremum."""
        return self.value + self.certified_error

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "upper": self.upper,
            "grid_size": self.grid_size,
            "lipschitz_bound": self.lipschitz_bound,
            "certified_error": self.certified_error,
            "argmax": self.argmax,
        }


@dataclass
class ConditionReport:
    delta: float
    sigma: SigmaResult
    alpha: float
    frostman_label: bool
    admissible: bool = True
    construction_admissible: bool = True
    diagnostics: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "delta": self.delta,
            "sigma": self.sigma.to_dict(),
            "frostman_label": self.frostman_label,
            "admissible": self.admissible,
            "construction_admissible": self.construction_admissible,
            "diagnostics": list(self.diagnostics),
        }


def carleson_delta(a) -> float:
    """Newman-Carleson separation constant of a finite sequence.

    Products are accumulated as sums of logarithms so that long sequences
    or nodes crowding the circle do not underflow. A single node gives 1.
    """
    a = as_nodes(a).nodes
    if a.size == 1:
        return 1.0
    rho = pseudo_hyperbolic_matrix(a)
    np.fill_diagonal(rho, 1.0)
    if np.any(rho == 0):
        raise DomainError("duplicate nodes: separation constant is 0")
    logs = np.log(rho).sum(axis=1)
    return float(math.exp(logs.min()))


def _terms(a: np.ndarray, alpha: float, xi) -> np.ndarray:
    xi = np.asarray(xi, dtype=complex)
    w = 1.0 - np.abs(a) ** 2
    den = np.abs(1.0 - np.conj(xi)[..., None] * a)
    return (w / den) ** alpha


def sigma_profile(a, alpha: float, xi) -> float:
    """The sum ``sum_k ((1 - |a_k|^2)/|1 - conj(xi) a_k|)^alpha`` at fixed ``xi``."""
    if alpha <= 0:
        raise DomainError("alpha must be positive")
    a = as_nodes(a).nodes
    xi = complex(xi)
    xi = xi / abs(xi)
    return float(_terms(a, alpha, xi).sum())


def sigma_lipschitz(a, alpha: float) -> float:
    """Upper bound on ``|d/dtheta|`` of the profile at ``xi = e^{i theta}``.

    Each term has derivative at most
    ``alpha (1 - |a|^2)^alpha |a| (1 - |a|)^{-(alpha + 1)}``.
    """
    m = np.abs(as_nodes(a).nodes)
    return float(np.sum(alpha * (1.0 - m**2) ** alpha * m * (1.0 - m) ** (-(alpha + 1.0))))


def sigma_alpha(a, alpha: float, grid_size: int = DEFAULT_GRID) -> SigmaResult:
    """Certified supremum of the profile over the unit circle.

    The grid is ``theta_j = 2 pi j / grid_size``; doubling the grid size
    therefore nests the grids and the value never decreases. Every angle
    is within ``pi / grid_size`` of a grid point, which gives
    ``certified_error = L * pi / grid_size``.
    """
    if alpha <= 0:
        raise DomainError("alpha must be positive")
    if grid_size < 16:
        raise DomainError("grid_size must be at least 16")
    a = as_nodes(a).nodes
    theta = 2.0 * np.pi * np.arange(grid_size) / grid_size
    prof = np.zeros(grid_size)
    # fixed summation order over nodes keeps the scan bit-reproducible
    xi = np.exp(1j * theta)
    for ak in a:
        prof += _terms(np.array([ak]), alpha, xi)[:, 0]
    j = int(np.argmax(prof))
    lip = sigma_lipschitz(a, alpha)
    return SigmaResult(
        value=float(prof[j]),
        grid_size=int(grid_size),
        lipschitz_bound=lip,
        certified_error=lip * math.pi / grid_size,
        argmax=float(theta[j]),
    )


def check_conditions(a, alpha: float, grid_size: int = DEFAULT_GRID) -> ConditionReport:
    """Separation constant and certified sigma bundled in one report.

    Duplicate nodes raise :class:`DomainError`. A separation constant below
    ``ADMISSIBLE_DELTA`` or a node at the origin is recorded in the report
    rather than raised, since both quantities are still well defined.
    """
    a = as_nodes(a)
    delta = carleson_delta(a)
    sigma = sigma_alpha(a, alpha, grid_size)
    diags = []
    admissible = delta >= ADMISSIBLE_DELTA
    if not admissible:
        diags.append(f"separation constant {delta:.3e} below threshold {ADMISSIBLE_DELTA:g}")
    if a.has_zero:
        diags.append("node at the origin: Blaschke-based constructions unavailable")
    return ConditionReport(
        delta=delta,
        sigma=sigma,
        alpha=float(alpha),
        frostman_label=(alpha == 1),
        admissible=admissible,
        construction_admissible=admissible and not a.has_zero,
        diagnostics=diags,
    )
