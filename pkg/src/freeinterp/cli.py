"""Command-line interface.

::

    freeinterp check <problem.json> [--out report.json]
    freeinterp interpolate <problem.json> --mode multiplier|f_alpha --out report.json
                           [--trace-csv trace.csv] [--slice-csv slice.csv] [--ray-angle 0.0]
    freeinterp bound <problem.json> --out report.json [--e-hat cache.json]
    freeinterp sweep --config sweep.json --out rows.csv [--workers N]

Exit codes: 0 success, 1 input error, 2 mathematically inadmissible input.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

import numpy as np

from . import __version__
from .conditions import check_conditions, sigma_alpha
from .disk_core import DomainError, as_nodes
from .interpolation import build_f_alpha_interpolant, build_multiplier_interpolant, verify_interpolation
from .multiplier import BOUND_QUAD, multiplier_norm_bound, m1_norm_bound
from .problem import ProblemError, ProblemFile, dump_json, pairs
from .quadrature import QuadratureSpec
from .sweep import SweepConfig, rows_to_csv, run_sweep
from .transforms import default_kernel_samples, estimate_kernel_constant

EXIT_OK, EXIT_INPUT, EXIT_INADMISSIBLE = 0, 1, 2
TRACE_RADIUS = 0.999
TRACE_POINTS = 1024


class Inadmissible(Exception):
    """Input parses but the mathematics rejects it (exit code 2)."""


def _provenance(quad: QuadratureSpec | None = None, **extra) -> dict:
    d = {
        "tool": "freeinterp",
        "version": __version__,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    }
    if quad is not None:
        d["quadrature"] = quad.to_dict()
    d.update(extra)
    return d


def _conditions(prob: ProblemFile):
    try:
        return check_conditions(prob.nodes, prob.alpha, prob.sigma_grid)
    except DomainError as e:
        raise Inadmissible(str(e)) from None


def _write_report(report: dict, out) -> None:
    if out is None:
        sys.stdout.write(dump_json(report))
    else:
        dump_json(report, out)


def cmd_check(args) -> int:
    prob = ProblemFile.load(args.problem)
    rep = _conditions(prob)
    report = {"condition": rep.to_dict(), "provenance": _provenance()}
    _write_report(report, args.out)
    return EXIT_OK if rep.admissible else EXIT_INADMISSIBLE


def _write_csv(path, header, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([repr(float(v)) for v in row])


def _trace_rows(func, radius=TRACE_RADIUS, n=TRACE_POINTS):
    theta = 2.0 * np.pi * np.arange(n) / n
    v = func(radius * np.exp(1j * theta))
    return zip(theta, v.real, v.imag, np.abs(v))


def _slice_rows(func, angle: float, n=TRACE_POINTS, rmax=TRACE_RADIUS):
    r = rmax * np.arange(n) / (n - 1)
    v = func(r * np.exp(1j * angle))
    return zip(r, v.real, v.imag, np.abs(v))


def _build(prob: ProblemFile, mode: str):
    if prob.targets is None:
        raise ProblemError("targets: required for interpolation")
    want = {"multiplier": "linf", "f_alpha": "l1"}[mode]
    if prob.targets.mode != want:
        raise Inadmissible(f"mode {mode} needs {want} targets, problem has {prob.targets.mode}")
    try:
        if mode == "multiplier":
            return build_multiplier_interpolant(prob.nodes, prob.targets.values)
        return build_f_alpha_interpolant(prob.nodes, prob.targets.values, prob.alpha)
    except DomainError as e:
        raise Inadmissible(str(e)) from None


def cmd_interpolate(args) -> int:
    prob = ProblemFile.load(args.problem)
    rep = _conditions(prob)
    func = _build(prob, args.mode)
    res = verify_interpolation(func, mode=args.mode)
    interp = {"mode": args.mode, **res.to_dict()}
    if args.mode == "multiplier":
        interp["y"] = pairs(func.y)
        interp["sup_target"] = func.sup_target
    else:
        interp["alpha"] = func.alpha
    report = {"condition": rep.to_dict(), "interpolation": interp, "provenance": _provenance()}
    _write_report(report, args.out)
    if args.trace_csv:
        _write_csv(args.trace_csv, ["theta", "re", "im", "abs"], _trace_rows(func))
    if args.slice_csv:
        _write_csv(args.slice_csv, ["r", "re", "im", "abs"], _slice_rows(func, args.ray_angle))
    return EXIT_OK


def _cache_key(alpha: float) -> str:
    return repr(float(alpha))


def load_e_hat(path, alpha: float, quad: QuadratureSpec):
    """Cached constant estimate for ``alpha``, or a fresh one stored back into ``path``."""
    cache = {}
    if path and os.path.exists(path):
        try:
            with open(path, encoding="utf-8") as fh:
                cache = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise ProblemError(f"e-hat cache: cannot read {path} ({e})") from None
        if not isinstance(cache, dict):
            raise ProblemError("e-hat cache: top level must be a JSON object")
    key = _cache_key(alpha)
    if key in cache:
        entry = cache[key]
        if not isinstance(entry, dict) or not isinstance(entry.get("value"), (int, float)):
            raise ProblemError(f"e-hat cache: entry {key}.value missing")
        return float(entry["value"]), dict(entry, source="cache")
    est = estimate_kernel_constant(default_kernel_samples(), alpha, quad)
    entry = est.to_dict()
    entry["quad"] = quad.to_dict()
    if path:
        cache[key] = entry
        dump_json(cache, path)
    return est.value, dict(entry, source="computed")


def cmd_bound(args) -> int:
    prob = ProblemFile.load(args.problem)
    if prob.alpha > 1:
        raise Inadmissible(f"alpha = {prob.alpha} > 1 is outside the supported range (0, 1]")
    rep = _conditions(prob)
    func = _build(prob, "multiplier")
    res = verify_interpolation(func, mode="multiplier")
    quad = prob.quad or BOUND_QUAD
    report = {
        "condition": rep.to_dict(),
        "interpolation": {"mode": "multiplier", **res.to_dict(), "y": pairs(func.y)},
    }
    if prob.alpha == 1:
        report["bound"] = {
            "alpha": 1.0,
            "m1_bound": m1_norm_bound(rep, func.sup_target),
            "explanation": "alpha = 1: the quadrature pipeline does not apply; "
            "reporting 2 (sigma_1/delta)^2 ||x||_inf only",
        }
        report["provenance"] = _provenance()
    else:
        e_hat, e_entry = load_e_hat(args.e_hat, prob.alpha, QuadratureSpec())
        s1 = sigma_alpha(as_nodes(prob.nodes), 1.0, prob.sigma_grid)
        bound = multiplier_norm_bound(
            func, prob.alpha, rep, e_hat, prob.xi_grid, quad, sigma1=s1, workers=args.workers
        )
        report["bound"] = bound.to_dict()
        report["e_hat"] = e_entry
        report["provenance"] = _provenance(quad, xi_grid=prob.xi_grid)
    _write_report(report, args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        with open(args.config, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as e:
        raise ProblemError(f"config: cannot read {args.config} ({e.strerror})") from None
    except json.JSONDecodeError as e:
        raise ProblemError(f"config: invalid JSON ({e})") from None
    cfg = SweepConfig.from_dict(raw)
    text = rows_to_csv(run_sweep(cfg, workers=args.workers))
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors (exit 1); exit 2 is reserved for inadmissible input
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="freeinterp", description="Free interpolation in Cauchy-Stieltjes families.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="separation constant and certified sigma")
    c.add_argument("problem")
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_check)

    i = sub.add_parser("interpolate", help="build an interpolant and report residuals")
    i.add_argument("problem")
    i.add_argument("--mode", choices=["multiplier", "f_alpha"], required=True)
    i.add_argument("--out", default=None)
    i.add_argument("--trace-csv", default=None, help="values on |z| = 0.999")
    i.add_argument("--slice-csv", default=None, help="values along a ray")
    i.add_argument("--ray-angle", type=float, default=0.0)
    i.set_defaults(func=cmd_interpolate)

    b = sub.add_parser("bound", help="multiplier norm upper bound")
    b.add_argument("problem")
    b.add_argument("--out", default=None)
    b.add_argument("--e-hat", default=None, help="JSON cache for the kernel-integral constant")
    b.add_argument("--workers", type=int, default=1)
    b.set_defaults(func=cmd_bound)

    s = sub.add_parser("sweep", help="seeded random property sweep to CSV")
    s.add_argument("--config", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ProblemError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except Inadmissible as e:
        print(f"inadmissible: {e}", file=sys.stderr)
        return EXIT_INADMISSIBLE


if __name__ == "__main__":
    sys.exit(main())
