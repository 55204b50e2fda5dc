"""Free interpolation on a finite separated node sequence.

Two constructions are provided.

Multiplier interpolant (bounded data ``x``)::

    f(z) = sum_n (1 - |a_n|^2)/(1 - conj(a_n) z) * B_n(z)/B_n(a_n) * x_n

which is stored in its partial-fraction form ``sum_k y_k/(1 - conj(a_k) z)``.

Weighted interpolant (summable data ``x``, exponent ``0 < alpha <= 1``)::

    g(z) = sum_n B_n(z) (1 - conj(a_n) z)^(-alpha) x_n / B_n(a_n)

so that ``g(a_k) (1 - |a_k|^2)^alpha = x_k``.

Here ``B_n`` is the normalized Blaschke product over all nodes except
``a_n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .conditions import ADMISSIBLE_DELTA, carleson_delta
from .disk_core import DomainError, NodeSequence, as_nodes, blaschke_diagonal, principal_power
from .transforms import RationalFamily


def _admissible_nodes(a) -> NodeSequence:
    a = as_nodes(a, require_nonzero=True)
    delta = carleson_delta(a)
    if delta < ADMISSIBLE_DELTA:
        raise DomainError(
            f"separation constant {delta:.3e} is below {ADMISSIBLE_DELTA:g}; "
            "interpolation bounds would be meaningless"
        )
    return a


def _targets(a: NodeSequence, x) -> np.ndarray:
    x = np.atleast_1d(np.asarray(x, dtype=complex)).ravel()
    if x.size != len(a):
        raise DomainError(f"{x.size} targets for {len(a)} nodes")
    if not np.all(np.isfinite(x)):
        raise DomainError("targets must be finite")
    return x


def _factor_matrix(a: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Blaschke factors ``b_k(z)`` with shape ``(len(a),) + z.shape``."""
    zz = z[None, ...]
    ak = a.reshape((-1,) + (1,) * z.ndim)
    return (zz - ak) / (1.0 - np.conj(ak) * zz) * (np.abs(ak) / ak)


def _excluded_products(a: np.ndarray, z: np.ndarray) -> np.ndarray:
    """All ``B_n(z)`` at once, without dividing by a factor that may vanish."""
    b = _factor_matrix(a, z)
    out = np.empty_like(b)
    for n in range(a.size):
        out[n] = np.prod(np.delete(b, n, axis=0), axis=0) if a.size > 1 else 1.0
    return out


def blaschke_expansion_coefficients(a, n: int) -> np.ndarray:
    """Coefficients ``R_k`` with ``B_n(z)/(1 - conj(a_n) z) = sum_k R_k/(1 - conj(a_k) z)``.

    ``R_k = (a_n/|a_n|) (|a_k|/a_k) (1 - |a_k|^2) / ((1 - conj(a_k) a_n) conj(B_k(a_k)))``.
    """
    a = as_nodes(a, require_nonzero=True).nodes
    bkk = blaschke_diagonal(a)
    an = a[n]
    return (an / abs(an)) * (np.abs(a) / a) * (1.0 - np.abs(a) ** 2) / ((1.0 - np.conj(a) * an) * np.conj(bkk))


def _expansion_matrix(av: np.ndarray) -> np.ndarray:
    # rows k, columns n; av may be extended precision
    b = (av[:, None] - av[None, :]) / (1.0 - np.conj(av)[None, :] * av[:, None])
    b = b * (np.abs(av) / av)[None, :]
    np.fill_diagonal(b, 1.0)
    bd = np.prod(b, axis=1)
    w = 1.0 - np.abs(av) ** 2
    unit = av / np.abs(av)
    return (
        w[None, :] * w[:, None]
        / (bd[None, :] * np.conj(bd)[:, None])
        * (unit[None, :] / unit[:, None])
        / (1.0 - np.conj(av)[:, None] * av[None, :])
    )


def _extended_coefficients(a: NodeSequence, x: np.ndarray) -> np.ndarray:
    # |y_k| can exceed |f| by orders of magnitude, so the expanded sum cancels
    # heavily; extended precision keeps that cancellation below 1e-12
    av = a.nodes.astype(np.clongdouble)
    return _expansion_matrix(av) @ x.astype(np.clongdouble)


def expansion_coefficients(a, x) -> np.ndarray:
    """Partial-fraction coefficients ``y_k`` of the multiplier interpolant.

    ::

        y_k = sum_n (1-|a_n|^2)(1-|a_k|^2) / (B_n(a_n) conj(B_k(a_k)))
                    * (a_n |a_k|)/(|a_n| a_k) * x_n / (1 - conj(a_k) a_n)

    Evaluated in extended precision where the platform has it and rounded.
    """
    a = _admissible_nodes(a)
    x = _targets(a, x)
    return _extended_coefficients(a, x).astype(complex)


@dataclass(frozen=True)
class MultiplierInterpolant:
    """Bounded-data interpolant, stored through its coefficients ``y``."""

    nodes: NodeSequence
    targets: np.ndarray
    y: np.ndarray
    y_ext: np.ndarray | None = field(default=None, repr=False, compare=False)

    def _coefficients(self):
        if self.y_ext is not None:
            return self.nodes.nodes.astype(np.clongdouble), self.y_ext
        return self.nodes.nodes, self.y

    @property
    def sup_target(self) -> float:
        return float(np.max(np.abs(self.targets)))

    def __call__(self, z):
        a, y = self._coefficients()
        z = np.asarray(z, dtype=complex).astype(a.dtype)
        out = np.zeros(z.shape, dtype=a.dtype)
        for ak, yk in zip(a, y):
            out = out + yk / (1.0 - np.conj(ak) * z)
        out = out.astype(complex)
        return out[()] if out.ndim == 0 else out

    def direct(self, z):
        """Evaluate from the Blaschke-product form; independent of ``y``."""
        z = np.asarray(z, dtype=complex)
        a = self.nodes.nodes
        bn = _excluded_products(a, z)
        bd = blaschke_diagonal(a)
        ax = a.reshape((-1,) + (1,) * z.ndim)
        coef = ((1.0 - np.abs(a) ** 2) * self.targets / bd).reshape(ax.shape)
        out = np.sum(coef * bn / (1.0 - np.conj(ax) * z[None, ...]), axis=0)
        return out[()] if out.ndim == 0 else out

    def derivative(self, z):
        """``f'(z) = sum_k y_k conj(a_k) / (1 - conj(a_k) z)^2``.

        Double precision only; it feeds quadratures with much looser tolerances.
        """
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape, dtype=complex)
        ac = np.conj(self.nodes.nodes)
        for bk, ck in zip(ac, self.y * ac):
            t = 1.0 / (1.0 - bk * z)
            out += ck * (t * t)
        return out[()] if out.ndim == 0 else out

    def as_rational(self) -> RationalFamily:
        return RationalFamily(1.0, self.nodes.nodes, self.y)

    def scaled(self, t: complex) -> "MultiplierInterpolant":
        y_ext = None if self.y_ext is None else self.y_ext * np.clongdouble(t)
        return MultiplierInterpolant(self.nodes, self.targets * t, self.y * t, y_ext)


def build_multiplier_interpolant(a, x) -> MultiplierInterpolant:
    a = _admissible_nodes(a)
    x = _targets(a, x)
    y_ext = _extended_coefficients(a, x)
    return MultiplierInterpolant(a, x, y_ext.astype(complex), y_ext)


@dataclass(frozen=True)
class FAlphaInterpolant:
    alpha: float
    nodes: NodeSequence
    targets: np.ndarray

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        a = self.nodes.nodes
        bn = _excluded_products(a, z)
        bd = blaschke_diagonal(a)
        out = np.zeros(z.shape, dtype=complex)
        for n, an in enumerate(a):
            kern = principal_power(1.0 - np.conj(an) * z, -self.alpha)
            out = out + bn[n] * kern * (self.targets[n] / bd[n])
        return out[()] if out.ndim == 0 else out

    def trace(self) -> np.ndarray:
        a = self.nodes.nodes
        return np.atleast_1d(self(a)) * (1.0 - np.abs(a) ** 2) ** self.alpha


def build_f_alpha_interpolant(a, x, alpha: float) -> FAlphaInterpolant:
    if not 0 < alpha <= 1:
        raise DomainError("alpha must lie in (0, 1]")
    a = _admissible_nodes(a)
    return FAlphaInterpolant(float(alpha), a, _targets(a, x))


@dataclass(frozen=True)
class YBoundReport:
    bounds: np.ndarray
    moduli: np.ndarray
    margins: np.ndarray
    holds: np.ndarray

    @property
    def all_hold(self) -> bool:
        return bool(np.all(self.holds))

    @property
    def min_margin(self) -> float:
        return float(np.min(self.margins))


def check_y_bound(a, x, y, sigma1: float, delta: float, slack: float = 1e-9) -> YBoundReport:
    """Check ``|y_k| <= (sigma_1/delta^2) ||x||_inf (1 - |a_k|^2)`` node by node.

    Pass the certified upper value of ``sigma_1``.
    """
    a = as_nodes(a).nodes
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    sup_x = float(np.max(np.abs(x))) if x.size else 0.0
    bounds = sigma1 / delta**2 * sup_x * (1.0 - np.abs(a) ** 2)
    moduli = np.abs(y)
    margins = bounds - moduli
    return YBoundReport(bounds, moduli, margins, margins >= -slack)


@dataclass(frozen=True)
class ResidualReport:
    mode: str
    residuals: np.ndarray

    @property
    def max_residual(self) -> float:
        return float(np.max(self.residuals))

    def to_dict(self) -> dict:
        return {"mode": self.mode, "residuals": self.residuals.tolist(), "max_residual": self.max_residual}


def verify_interpolation(func, a=None, x=None, mode: str = "multiplier", alpha: float | None = None) -> ResidualReport:
    """Per-node residuals of an interpolant.

    ``mode="multiplier"`` measures ``|f(a_k) - x_k|``; ``mode="f_alpha"``
    measures ``|g(a_k)(1 - |a_k|^2)^alpha - x_k|``. Nodes, targets and
    ``alpha`` default to those stored on ``func``.
    """
    a = as_nodes(func.nodes if a is None else a).nodes
    x = np.asarray(func.targets if x is None else x, dtype=complex)
    vals = np.atleast_1d(func(a))
    if mode == "multiplier":
        res = np.abs(vals - x)
    elif mode == "f_alpha":
        alpha = getattr(func, "alpha", None) if alpha is None else alpha
        if alpha is None:
            raise DomainError("f_alpha residuals need alpha")
        res = np.abs(vals * (1.0 - np.abs(a) ** 2) ** alpha - x)
    else:
        raise DomainError(f"unknown mode {mode!r}")
    return ResidualReport(mode, res)
