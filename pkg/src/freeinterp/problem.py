"""Problem files: JSON in, JSON reports out.

Complex numbers are written as ``[re, im]`` pairs everywhere.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .conditions import DEFAULT_GRID
from .multiplier import DEFAULT_XI_GRID
from .quadrature import QuadratureSpec

TARGET_MODES = ("linf", "l1")


class ProblemError(ValueError):
    """Malformed problem or config file; the message names the offending field."""


def complex_from_pair(v, where: str) -> complex:
    if isinstance(v, (list, tuple)) and len(v) == 2 and all(
        isinstance(t, (int, float)) and not isinstance(t, bool) for t in v
    ):
        z = complex(float(v[0]), float(v[1]))
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ProblemError(f"{where}: non-finite value")
        return z
    raise ProblemError(f"{where}: expected a [re, im] pair, got {v!r}")


def pair(z) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def pairs(zs) -> list[list[float]]:
    return [pair(z) for z in np.atleast_1d(zs)]


@dataclass
class Targets:
    mode: str
    values: list[complex]

    def to_dict(self) -> dict:
        return {"mode": self.mode, "values": pairs(self.values) if self.values else []}


@dataclass
class ProblemFile:
    alpha: float
    nodes: list[complex]
    targets: Targets | None = None
    xi_grid: int = DEFAULT_XI_GRID
    sigma_grid: int = DEFAULT_GRID
    quad: QuadratureSpec | None = None
    seed: int | None = None

    @classmethod
    def from_dict(cls, d) -> "ProblemFile":
        if not isinstance(d, dict):
            raise ProblemError("problem: top level must be a JSON object")
        unknown = set(d) - {"alpha", "nodes", "targets", "grid", "seed"}
        if unknown:
            raise ProblemError(f"problem: unknown field(s) {sorted(unknown)}")
        if "alpha" not in d:
            raise ProblemError("alpha: missing")
        alpha = d["alpha"]
        if isinstance(alpha, bool) or not isinstance(alpha, (int, float)) or not alpha > 0:
            raise ProblemError(f"alpha: expected a positive number, got {alpha!r}")
        raw_nodes = d.get("nodes")
        if not isinstance(raw_nodes, list) or not raw_nodes:
            raise ProblemError("nodes: expected a nonempty list of [re, im] pairs")
        nodes = [complex_from_pair(v, f"nodes[{i}]") for i, v in enumerate(raw_nodes)]

        targets = None
        if d.get("targets") is not None:
            t = d["targets"]
            if not isinstance(t, dict):
                raise ProblemError("targets: expected an object with mode and values")
            mode = t.get("mode")
            if mode not in TARGET_MODES:
                raise ProblemError(f"targets.mode: expected one of {TARGET_MODES}, got {mode!r}")
            vals = t.get("values")
            if not isinstance(vals, list):
                raise ProblemError("targets.values: expected a list of [re, im] pairs")
            values = [complex_from_pair(v, f"targets.values[{i}]") for i, v in enumerate(vals)]
            if len(values) != len(nodes):
                raise ProblemError(f"targets.values: {len(values)} values for {len(nodes)} nodes")
            targets = Targets(mode, values)

        grid = d.get("grid", {}) or {}
        if not isinstance(grid, dict):
            raise ProblemError("grid: expected an object")
        xi_grid = _positive_int(grid.get("xi_grid", DEFAULT_XI_GRID), "grid.xi_grid")
        sigma_grid = _positive_int(grid.get("sigma_grid", DEFAULT_GRID), "grid.sigma_grid")
        if sigma_grid < 16:
            raise ProblemError("grid.sigma_grid: must be at least 16")
        quad = parse_quad(grid["quad"], "grid.quad") if grid.get("quad") is not None else None

        seed = d.get("seed")
        if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int)):
            raise ProblemError(f"seed: expected an integer, got {seed!r}")
        return cls(float(alpha), nodes, targets, xi_grid, sigma_grid, quad, seed)

    def to_dict(self) -> dict:
        d = {"alpha": self.alpha, "nodes": pairs(self.nodes)}
        if self.targets is not None:
            d["targets"] = self.targets.to_dict()
        d["grid"] = {"xi_grid": self.xi_grid, "sigma_grid": self.sigma_grid}
        if self.quad is not None:
            d["grid"]["quad"] = self.quad.to_dict()
        if self.seed is not None:
            d["seed"] = self.seed
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def loads(cls, text: str) -> "ProblemFile":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as e:
            raise ProblemError(f"problem: invalid JSON ({e})") from None
        return cls.from_dict(d)

    @classmethod
    def load(cls, path) -> "ProblemFile":
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise ProblemError(f"problem: cannot read {path} ({e.strerror})") from None
        return cls.loads(text)


def _positive_int(v, where: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
        raise ProblemError(f"{where}: expected a positive integer, got {v!r}")
    return v


def parse_quad(d, where: str = "quad", base: QuadratureSpec | None = None) -> QuadratureSpec:
    if not isinstance(d, dict):
        raise ProblemError(f"{where}: expected an object")
    base = base or QuadratureSpec()
    fields = base.to_dict()
    for k, v in d.items():
        if k not in fields:
            raise ProblemError(f"{where}.{k}: unknown quadrature setting")
        if k == "rel_tol":
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ProblemError(f"{where}.rel_tol: expected a number")
            fields[k] = float(v)
        else:
            fields[k] = _positive_int(v, f"{where}.{k}")
    try:
        return QuadratureSpec(**fields)
    except ValueError as e:
        raise ProblemError(f"{where}: {e}") from None


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj, indent=2, allow_nan=True) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return text
