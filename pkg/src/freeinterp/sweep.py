"""Seeded random sweeps over admissible node configurations.

Every instance draws from its own generator ``default_rng([seed, index])``,
so rows do not depend on how instances are scheduled across workers.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .conditions import DEFAULT_GRID, carleson_delta, check_conditions, sigma_alpha
from .interpolation import (
    build_f_alpha_interpolant,
    build_multiplier_interpolant,
    check_y_bound,
    verify_interpolation,
)
from .multiplier import BOUND_QUAD, multiplier_norm_bound
from .problem import ProblemError, parse_quad
from .quadrature import QuadratureSpec

COLUMNS = [
    "instance",
    "N",
    "alpha",
    "delta",
    "sigma_alpha",
    "sigma_alpha_upper",
    "max_residual",
    "y_bound_margin",
    "expansion_discrepancy",
    "sup_bound",
]

MIN_NODE_MODULUS = 1e-3


@dataclass
class SweepConfig:
    seed: int = 0
    instances: int = 200
    n_min: int = 1
    n_max: int = 12
    radius_cap: float = 0.95
    min_delta: float = 1e-3
    max_target: float = 10.0
    alphas: list[float] = field(default_factory=lambda: [0.25, 0.5, 1.0])
    sigma_grid: int = DEFAULT_GRID
    bound: bool = False
    xi_grid: int = 8
    e_hat: float = 0.0
    quad: QuadratureSpec = BOUND_QUAD

    def __post_init__(self):
        if not 1 <= self.n_min <= self.n_max:
            raise ProblemError("n_min/n_max: need 1 <= n_min <= n_max")
        if not 0 < self.radius_cap <= 0.95:
            raise ProblemError("radius_cap: must lie in (0, 0.95]")
        if not 0 < self.min_delta < 1:
            raise ProblemError("min_delta: must lie in (0, 1)")
        if self.instances < 0:
            raise ProblemError("instances: must be nonnegative")
        if not self.alphas or any(not a > 0 for a in self.alphas):
            raise ProblemError("alphas: need a nonempty list of positive exponents")
        if self.sigma_grid < 16:
            raise ProblemError("sigma_grid: must be at least 16")

    @classmethod
    def from_dict(cls, d: dict) -> "SweepConfig":
        if not isinstance(d, dict):
            raise ProblemError("config: top level must be a JSON object")
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(d) - known
        if unknown:
            raise ProblemError(f"config: unknown field(s) {sorted(unknown)}")
        kw = dict(d)
        if "quad" in kw:
            kw["quad"] = parse_quad(kw["quad"], "quad", base=BOUND_QUAD)
        try:
            return cls(**kw)
        except TypeError as e:
            raise ProblemError(f"config: {e}") from None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["quad"] = self.quad.to_dict()
        return d


@dataclass
class Instance:
    index: int
    nodes: np.ndarray
    targets: np.ndarray  # bounded data for the multiplier construction
    l1_targets: np.ndarray
    probes: np.ndarray  # interior points for the two-form comparison


def _random_targets(rng, n: int, cap: float) -> np.ndarray:
    return cap * rng.random(n) * np.exp(2j * np.pi * rng.random(n))


def make_instance(cfg: SweepConfig, index: int) -> Instance:
    """Draw one admissible configuration by rejection sampling on the separation constant."""
    rng = np.random.default_rng([cfg.seed, index])
    n = int(rng.integers(cfg.n_min, cfg.n_max + 1))
    while True:
        r = cfg.radius_cap * np.sqrt(rng.random(n))
        a = r * np.exp(2j * np.pi * rng.random(n))
        if np.min(np.abs(a)) < MIN_NODE_MODULUS:
            continue
        if n == 1 or carleson_delta(a) >= cfg.min_delta:
            break
    x = _random_targets(rng, n, cfg.max_target)
    x1 = _random_targets(rng, n, cfg.max_target)
    probes = 0.99 * np.sqrt(rng.random(100)) * np.exp(2j * np.pi * rng.random(100))
    return Instance(index, a, x, x1, probes)


def run_instance(cfg: SweepConfig, index: int) -> list[dict]:
    inst = make_instance(cfg, index)
    a = inst.nodes
    f = build_multiplier_interpolant(a, inst.targets)
    delta = carleson_delta(a)
    s1 = sigma_alpha(a, 1.0, cfg.sigma_grid)
    yrep = check_y_bound(a, inst.targets, f.y, s1.upper, delta)
    disc = float(np.max(np.abs(f(inst.probes) - f.direct(inst.probes))))
    res_m = verify_interpolation(f).max_residual
    rows = []
    for alpha in cfg.alphas:
        sa = s1 if alpha == 1 else sigma_alpha(a, alpha, cfg.sigma_grid)
        res = res_m
        if alpha <= 1:
            g = build_f_alpha_interpolant(a, inst.l1_targets, alpha)
            res = max(res, verify_interpolation(g, mode="f_alpha").max_residual)
        sup = math.nan
        if cfg.bound and 0 < alpha < 1:
            rep = check_conditions(a, alpha, cfg.sigma_grid)
            sup = multiplier_norm_bound(f, alpha, rep, cfg.e_hat, cfg.xi_grid, cfg.quad, sigma1=s1).sup_bound
        rows.append(
            {
                "instance": index,
                "N": len(a),
                "alpha": float(alpha),
                "delta": delta,
                "sigma_alpha": sa.value,
                "sigma_alpha_upper": sa.upper,
                "max_residual": res,
                "y_bound_margin": yrep.min_margin,
                "expansion_discrepancy": disc,
                "sup_bound": sup,
            }
        )
    return rows


def _run_one(args):
    cfg, index = args
    return run_instance(cfg, index)


def run_sweep(cfg: SweepConfig, workers: int = 1) -> list[dict]:
    """All rows of the sweep, in instance order regardless of ``workers``."""
    jobs = [(cfg, i) for i in range(cfg.instances)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            chunks = list(ex.map(_run_one, jobs))
    else:
        chunks = [_run_one(j) for j in jobs]
    return [row for chunk in chunks for row in chunk]


def _fmt(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    v = float(v)
    return "" if math.isnan(v) else repr(v)


def rows_to_csv(rows: list[dict]) -> str:
    """CSV text with a fixed column order, ``repr`` floats and LF line endings."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for row in rows:
        w.writerow([_fmt(row[c]) for c in COLUMNS])
    return buf.getvalue()
