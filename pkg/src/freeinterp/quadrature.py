"""Graded Gauss-Legendre quadrature for weighted area integrals over the disk.

Computes

    I = int_0^1 int_{-pi}^{pi} F(r, theta) (1 - r)^(alpha - 1) dtheta dr

for nonnegative integrands that may peak at the boundary. The endpoint
weight is removed by ``u = (1 - r)^alpha``, which turns the integral into
``(1/alpha) int_0^1 int F du dtheta`` with a bounded integrand in ``u``.

Panels in ``u`` are dyadic toward ``u = 0``. Angular panels are graded
dyadically toward the angle of every *peak* ``w`` (``|w| <= 1``), down to
the local width ``1 - |w| r`` of the feature at the current radius. The
integrand receives ``s = 1 - r`` separately so boundary singularities can be
evaluated without cancellation.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

#: peaks with smaller modulus are smooth enough for the base angular mesh
PEAK_MIN_MODULUS = 0.5
#: finest angular scale; below it r and 1 are indistinguishable in double
ANGULAR_FLOOR = 1e-15


@dataclass(frozen=True)
class QuadratureSpec:
    """Mesh and refinement settings.

    Parameters
    ----------
    radial_panels : int
        Number of dyadic levels in ``u`` toward the boundary.
    angular_panels : int
        Number of uniform base panels on the circle.
    gauss_order : int
        Gauss-Legendre points per panel and direction at refinement 0.
    max_refinements : int
        Each refinement raises the order by 4 and the radial depth by 6.
    rel_tol : float
        Stop once two successive refinements agree to this relative change.
    """

    radial_panels: int = 28
    angular_panels: int = 8
    gauss_order: int = 8
    max_refinements: int = 3
    rel_tol: float = 1e-8

    def __post_init__(self):
        for name in ("radial_panels", "angular_panels", "gauss_order", "max_refinements"):
            if int(getattr(self, name)) <= 0:
                raise ValueError(f"QuadratureSpec.{name} must be positive")
        if not 0 < self.rel_tol <= 1e-3:
            raise ValueError("QuadratureSpec.rel_tol must lie in (0, 1e-3]")

    def refined(self, levels: int = 1) -> "QuadratureSpec":
        """These settings started ``levels`` refinements deeper."""
        return QuadratureSpec(
            radial_panels=self.radial_panels + 6 * levels,
            angular_panels=self.angular_panels,
            gauss_order=self.gauss_order + 4 * levels,
            max_refinements=self.max_refinements,
            rel_tol=self.rel_tol,
        )

    def to_dict(self) -> dict:
        return {
            "radial_panels": self.radial_panels,
            "angular_panels": self.angular_panels,
            "gauss_order": self.gauss_order,
            "max_refinements": self.max_refinements,
            "rel_tol": self.rel_tol,
        }


@dataclass(frozen=True)
class QuadResult:
    value: float
    converged: bool
    refinements: int
    rel_change: float

    def __float__(self):
        return self.value


@functools.lru_cache(maxsize=64)
def _gauss(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def _panel_nodes(breaks: np.ndarray, order: int):
    """Gauss nodes and weights on consecutive panels ``[breaks[i], breaks[i+1]]``."""
    x, w = _gauss(order)
    lo, hi = breaks[:-1], breaks[1:]
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def _angular_breaks(base: int, peaks, s_min: float) -> np.ndarray:
    pts = [2.0 * np.pi * np.arange(base) / base]
    for w in peaks:
        rho = abs(w)
        c = float(np.angle(w)) % (2.0 * np.pi)
        scale = max((1.0 - rho) + rho * s_min, ANGULAR_FLOOR)
        nlev = max(int(math.ceil(math.log2(np.pi / scale))), 0)
        d = scale * 2.0 ** np.arange(nlev)
        pts.append(np.array([c]))
        pts.append((c + d) % (2.0 * np.pi))
        pts.append((c - d) % (2.0 * np.pi))
    b = np.unique(np.concatenate(pts))
    b = np.concatenate([b, [b[0] + 2.0 * np.pi]])
    keep = np.concatenate([[True], np.diff(b) > 1e-16 * (1.0 + np.abs(b[1:]))])
    return b[keep]


def graded_disk_integral(F, alpha: float, q: QuadratureSpec, peaks=()) -> float:
    """One fixed-mesh evaluation of the weighted disk integral.

    ``F(r, s, theta)`` receives broadcastable arrays with ``s = 1 - r``
    and must return a nonnegative array of the broadcast shape.
    """
    peaks = [complex(p) for p in peaks if abs(p) >= PEAK_MIN_MODULUS]
    u_breaks = np.concatenate([[0.0], 2.0 ** -np.arange(q.radial_panels, -1, -1, dtype=float)])
    xg, wg = _gauss(q.gauss_order)
    total = 0.0
    for u0, u1 in zip(u_breaks[:-1], u_breaks[1:]):
        half, mid = 0.5 * (u1 - u0), 0.5 * (u1 + u0)
        u = mid + half * xg
        wu = half * wg
        s = u ** (1.0 / alpha)
        r = 1.0 - s
        theta, wt = _panel_nodes(_angular_breaks(q.angular_panels, peaks, float(s.min())), q.gauss_order)
        vals = np.broadcast_to(F(r[:, None], s[:, None], theta[None, :]), (u.size, theta.size))
        total += float(wu @ (vals @ wt))
    return total / alpha


def adaptive_disk_integral(F, alpha: float, q: QuadratureSpec, peaks=()) -> QuadResult:
    """Refine :func:`graded_disk_integral` until successive values agree.

    Non-convergence is reported in the result, never raised.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    prev = graded_disk_integral(F, alpha, q, peaks)
    change = math.inf
    for m in range(1, q.max_refinements + 1):
        cur = graded_disk_integral(F, alpha, q.refined(m), peaks)
        scale = max(abs(cur), abs(prev))
        change = abs(cur - prev) / scale if scale > 0 else 0.0
        if not math.isfinite(cur):
            return QuadResult(cur, False, m, math.inf)
        prev = cur
        if change <= q.rel_tol:
            return QuadResult(cur, True, m, change)
    return QuadResult(prev, False, q.max_refinements, change)
