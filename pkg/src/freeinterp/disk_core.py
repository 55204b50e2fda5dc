"""Complex primitives on the unit disk.

Blaschke factors with the unimodular normalizer ``|a|/a``, products of
factors with one node left out, the pseudo-hyperbolic distance and the
principal branch of ``w**alpha`` on the right half-plane.

All functions accept scalars or numpy arrays for the evaluation point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: pseudo-hyperbolic distance below which two nodes count as the same point
DUPLICATE_TOL = 1e-14


class DomainError(ValueError):
    """Raised when an input lies outside the domain of a construction."""


@dataclass(frozen=True)
class DiskPoint:
    """A point of the open unit disk."""

    value: complex

    def __post_init__(self):
        v = complex(self.value)
        if not abs(v) < 1.0:
            raise DomainError(f"|z| must be < 1, got |{v}| = {abs(v)}")
        object.__setattr__(self, "value", v)

    def __complex__(self):
        return self.value


@dataclass(frozen=True)
class BoundaryPoint:
    """A point of the unit circle, renormalized to exact unit modulus."""

    value: complex

    def __post_init__(self):
        v = complex(self.value)
        m = abs(v)
        if m == 0.0 or not np.isfinite(m):
            raise DomainError(f"cannot normalize {v} onto the unit circle")
        if abs(m - 1.0) > 1e-6:
            raise DomainError(f"boundary point must have modulus 1, got {m}")
        object.__setattr__(self, "value", v / m)

    @classmethod
    def from_angle(cls, theta: float) -> "BoundaryPoint":
        return cls(complex(np.cos(theta), np.sin(theta)))

    @property
    def angle(self) -> float:
        return float(np.angle(self.value))

    def __complex__(self):
        return self.value


class NodeSequence:
    """Finite sequence of distinct interpolation nodes in the open disk.

    Parameters
    ----------
    nodes : sequence of complex
        The nodes ``a_1, ..., a_N`` (``N >= 1``).
    require_nonzero : bool
        Reject a node at the origin. Blaschke constructions need this since
        the normalizer ``|a|/a`` is undefined at 0.
    """

    def __init__(self, nodes, require_nonzero: bool = False):
        a = np.atleast_1d(np.asarray(nodes, dtype=complex)).ravel()
        if a.size == 0:
            raise DomainError("a node sequence needs at least one node")
        if not np.all(np.isfinite(a)):
            raise DomainError("nodes must be finite")
        if np.any(np.abs(a) >= 1.0):
            k = int(np.argmax(np.abs(a)))
            raise DomainError(f"node {k} = {a[k]} is not inside the unit disk")
        rho = pseudo_hyperbolic_matrix(a)
        np.fill_diagonal(rho, np.inf)
        if np.any(rho <= DUPLICATE_TOL):
            i, j = np.argwhere(rho <= DUPLICATE_TOL)[0]
            raise DomainError(f"duplicate node: a[{i}] and a[{j}] coincide ({a[i]})")
        self.nodes = a
        self.nodes.setflags(write=False)
        if require_nonzero:
            self.require_nonzero()

    def require_nonzero(self) -> "NodeSequence":
        if np.any(self.nodes == 0):
            k = int(np.flatnonzero(self.nodes == 0)[0])
            raise DomainError(
                f"node {k} is the origin; Blaschke factors need nonzero nodes"
            )
        return self

    @property
    def has_zero(self) -> bool:
        return bool(np.any(self.nodes == 0))

    def __len__(self):
        return self.nodes.size

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, k):
        return self.nodes[k]

    def __repr__(self):
        return f"NodeSequence({self.nodes.tolist()!r})"


def as_nodes(a, require_nonzero: bool = False) -> NodeSequence:
    if isinstance(a, NodeSequence):
        return a.require_nonzero() if require_nonzero else a
    return NodeSequence(a, require_nonzero=require_nonzero)


def blaschke_factor(z, a):
    """Normalized Blaschke factor ``(z - a)/(1 - conj(a) z) * |a|/a``.

    The factor vanishes at ``a``, is unimodular on the circle and takes
    the value ``-|a|`` at the origin.
    """
    a = complex(a)
    if a == 0:
        raise DomainError("Blaschke factor at a = 0: normalizer |a|/a undefined")
    if not abs(a) < 1:
        raise DomainError(f"Blaschke node must lie in the disk, got {a}")
    z = np.asarray(z, dtype=complex)
    den = 1.0 - np.conj(a) * z
    if np.any(den == 0):
        raise DomainError(f"pole of the Blaschke factor hit at z = 1/conj({a})")
    out = (z - a) / den * (abs(a) / a)
    return out[()] if out.ndim == 0 else out


def pseudo_hyperbolic(z, w) -> float:
    """``|z - w| / |1 - conj(w) z|`` for two points of the disk."""
    z, w = complex(z), complex(w)
    if not (abs(z) < 1 and abs(w) < 1):
        raise DomainError("pseudo-hyperbolic distance needs points of the open disk")
    return abs(z - w) / abs(1.0 - np.conj(w) * z)


def pseudo_hyperbolic_matrix(a) -> np.ndarray:
    """All pairwise pseudo-hyperbolic distances of a node array."""
    a = np.asarray(a, dtype=complex)
    num = np.abs(a[:, None] - a[None, :])
    den = np.abs(1.0 - np.conj(a)[None, :] * a[:, None])
    return num / den


def principal_power(w, alpha: float):
    """``exp(alpha * Log w)`` on the open right half-plane."""
    w = np.asarray(w, dtype=complex)
    if np.any(w.real <= 0):
        raise DomainError("principal_power needs Re(w) > 0")
    out = np.exp(alpha * np.log(w))
    return out[()] if out.ndim == 0 else out


def blaschke_product_excluding(a, n: int, z):
    """``B_n(z)``: product of the Blaschke factors of every node except ``a[n]``.

    ``n`` is a zero-based index. A single-node sequence gives the empty
    product 1.
    """
    a = as_nodes(a, require_nonzero=True)
    if not 0 <= n < len(a):
        raise IndexError(f"node index {n} out of range for {len(a)} nodes")
    z = np.asarray(z, dtype=complex)
    out = np.ones_like(z)
    for k, ak in enumerate(a.nodes):
        if k != n:
            out = out * blaschke_factor(z, ak)
    return out[()] if out.ndim == 0 else out


def blaschke_diagonal(a) -> np.ndarray:
    """The values ``B_n(a_n)`` for every node, as an array."""
    a = as_nodes(a, require_nonzero=True).nodes
    nrm = np.abs(a) / a
    b = (a[:, None] - a[None, :]) / (1.0 - np.conj(a)[None, :] * a[:, None])
    b = b * nrm[None, :]
    np.fill_diagonal(b, 1.0)
    return np.prod(b, axis=1)


def stable_kernel_modulus(w, r, s, theta):
    """``|1 - conj(w) r e^{i theta}|`` with ``s = 1 - r`` supplied separately.

    Written as ``sqrt((1 - |w| r)^2 + 4 |w| r sin^2(phi/2))`` with
    ``1 - |w| r = (1 - |w|) + |w| s``, so it stays accurate when ``r`` rounds
    to 1 and ``w`` sits on the circle.
    """
    rho = abs(complex(w))
    phi = np.asarray(theta) - (np.angle(w) if rho > 0 else 0.0)
    gap = (1.0 - rho) + rho * np.asarray(s)
    return np.sqrt(gap * gap + 4.0 * rho * np.asarray(r) * np.sin(0.5 * phi) ** 2)
