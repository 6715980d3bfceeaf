"""Command-line front door.

Subcommands: tabulate, verify, surmise, mc, oracle-compare. All tables
are written with 17 significant digits in a fixed column order, so a
repeated run with an identical configuration is byte-identical. Exit
status: 0 success, 1 verification failure (some checked relation landed
outside its tolerance), 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .catalog import TranscendentId, all_specs, lookup
from .errors import LevelSpacingError
from .fredholm import oracle_compare, sine_kernel_det
from .ode import integrate, residual_at_nodes
from .sampler import collect_spacings, ks_distance, spacing_histogram
from .series import extend_series, residual_of_series_float
from .spacings import BETAS, SpacingPipeline

OUTDIR_ENV = "LEVELSPACING_OUTDIR"
VERIFY_SUITES = ("series", "ode", "identities", "oracle", "all")

_KS_BOUND = {1: 0.01, 2: 0.01, 4: 0.015}


@dataclass
class RunConfig:
    """Validated bundle of options one subcommand runs under."""

    command: str
    beta: Optional[int] = None
    s_max: float = 5.0
    step: float = 0.01
    rel_tol: float = 1e-12
    output_format: str = "csv"
    output_path: Optional[str] = None  # None means standard output
    seed: Optional[int] = None
    samples: Optional[int] = None

    def validate(self) -> None:
        if self.beta is not None and self.beta not in BETAS:
            raise ValueError(f"beta must be one of {BETAS}")
        if not self.s_max > 0:
            raise ValueError("s-max must be positive")
        if not self.step > 0:
            raise ValueError("step must be positive")
        if not self.step < self.s_max:
            raise ValueError("step must be smaller than s-max")
        if not 1e-13 <= self.rel_tol <= 1e-6:
            raise ValueError("rel-tol must lie in [1e-13, 1e-6]")
        if self.output_format not in ("csv", "json"):
            raise ValueError("format must be csv or json")
        if self.samples is not None and self.samples < 1:
            raise ValueError("samples must be positive")


def _resolve_output(path: Optional[str]) -> Optional[str]:
    """Apply the default-output-directory environment variable."""
    if path is None or path == "-":
        return None
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir and not os.path.isabs(path):
        return os.path.join(outdir, path)
    return path


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w") as fh:
            fh.write(text)
        print(f"wrote {path}")


def _csv_line(values) -> str:
    return ",".join("%.17g" % v for v in values)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_tabulate(cfg: RunConfig) -> int:
    pipeline = SpacingPipeline(coverage=max(8.0, cfg.s_max),
                               rel_tol=cfg.rel_tol)
    table = pipeline.tabulate(cfg.beta, cfg.s_max, cfg.step)
    text = table.to_csv() if cfg.output_format == "csv" else table.to_json()
    _emit(text, _resolve_output(cfg.output_path))
    return 0


def _cmd_surmise(cfg: RunConfig) -> int:
    pipeline = SpacingPipeline(rel_tol=cfg.rel_tol)
    for metric in ("max_abs", "max_rel_at_peak"):
        rep = pipeline.surmise_report(metric)
        print(f"{metric}: {rep['value']:.6f} attained at s = {rep['s_at']:.4f}")
    return 0


def _cmd_oracle_compare(cfg: RunConfig, grid, n_nodes: int, tol: float) -> int:
    pipeline = SpacingPipeline(coverage=max(8.0, max(grid)),
                               rel_tol=cfg.rel_tol)
    rows = oracle_compare(pipeline, grid, n_nodes=n_nodes)
    lines = ["s,E2_painleve,E2_fredholm,diff"]
    lines += [_csv_line(r) for r in rows]
    _emit("\n".join(lines) + "\n", _resolve_output(cfg.output_path))
    worst = max(rows, key=lambda r: abs(r[3]))
    print(f"max |diff| = {abs(worst[3]):.3e} at s = {worst[0]:g} "
          f"(tolerance {tol:g})")
    return 0 if abs(worst[3]) <= tol else 1


def _cmd_mc(cfg: RunConfig, window: float, bins: int, check: bool) -> int:
    beta = cfg.beta or 2
    seed = cfg.seed if cfg.seed is not None else 0
    samples = cfg.samples or 4200
    pipeline = SpacingPipeline(rel_tol=cfg.rel_tol)
    spacings = collect_spacings(beta, 200, samples, seed,
                                window_fraction=window)
    ks = ks_distance(spacings, beta, pipeline=pipeline)
    rows = spacing_histogram(spacings, pipeline, beta, bins=bins)
    lines = ["bin_left,bin_right,count,density,exact_p"]
    lines += [_csv_line(r) for r in rows]
    _emit("\n".join(lines) + "\n", _resolve_output(cfg.output_path))
    bound = _KS_BOUND[beta]
    print(f"beta={beta} n=200 samples={samples} spacings={spacings.size} "
          f"KS={ks:.5f} (reference bound {bound})")
    if check and ks >= bound:
        return 1
    return 0


# ---------------------------------------------------------------------------
# verification suites


def _verify_series(lines: list, failures: list) -> None:
    # truncated-series residual must vanish faster than s^order
    for spec in all_specs():
        series = extend_series(spec, target_order=6)
        lo, hi = 1e-8, 1e-2
        r_lo = abs(residual_of_series_float(spec, series, lo))
        r_hi = abs(residual_of_series_float(spec, series, hi))
        slope = (math.log(r_hi) - math.log(r_lo)) / (math.log(hi) - math.log(lo))
        ok = slope > float(series.order)
        lines.append(f"  series {spec.id.value:20s} residual slope {slope:6.2f} "
                     f"(> {float(series.order):.0f} required) "
                     f"[{r_lo:.1e} @ {lo:g}, {r_hi:.1e} @ {hi:g}]")
        if not ok:
            failures.append(f"series residual slope {slope:.2f} <= order "
                            f"for {spec.id.value}")


def _verify_ode(lines: list, failures: list, rel_tol: float) -> None:
    for spec in all_specs():
        series = extend_series(spec, target_order=12)
        sine = spec.id in (TranscendentId.SIGMA_PV, TranscendentId.TILDE_SIGMA)
        traj = integrate(spec, series, 30.0 if sine else 640.0,
                         rel_tol=rel_tol)
        res = np.abs(residual_at_nodes(traj))
        worst_i = int(res.argmax())
        bound = 10.0 * traj.tolerance_profile[0]
        handoff = traj.audits["handoff"]
        lines.append(f"  ode {spec.id.value:20s} max residual {res.max():.2e} "
                     f"at s = {traj.nodes[worst_i, 0]:.3g} (bound {bound:.0e}); "
                     f"handoff {handoff:.1e}; flips {list(traj.branch_flips)}")
        if res.max() > bound:
            failures.append(f"ode residual {res.max():.2e} > {bound:.0e} "
                            f"for {spec.id.value}")
        if traj.branch_flips:
            failures.append(f"unexpected branch flips for {spec.id.value}")


def _verify_identities(lines: list, failures: list, pipeline: SpacingPipeline,
                       tol: float) -> None:
    grid = np.linspace(0.1, 4.0, 50)
    for which in ("a1", "a2"):
        diffs = [abs(np.subtract(*pipeline.derivative_identity_check(which, s)))
                 for s in grid]
        i = int(np.argmax(diffs))
        lines.append(f"  identity {which}: worst |lhs-rhs| = {diffs[i]:.2e} "
                     f"at s = {grid[i]:.3f} (tolerance {tol:g})")
        if diffs[i] > tol:
            failures.append(f"{which} off by {diffs[i]:.2e} at s = {grid[i]:.3f}")
    d4 = [abs(pipeline.e1_from_e2_crosscheck(s) - pipeline.gap_probability(1, s))
          for s in grid]
    i = int(np.argmax(d4))
    lines.append(f"  identity ws4: worst |diff| = {d4[i]:.2e} at s = {grid[i]:.3f} "
                 f"(tolerance 1e-06)")
    if d4[i] > 1e-6:
        failures.append(f"ws4 off by {d4[i]:.2e} at s = {grid[i]:.3f}")
    d5 = [abs(pipeline.e4_from_e1_e2_crosscheck(s) - pipeline.gap_probability(4, s / 2))
          for s in grid]
    i = int(np.argmax(d5))
    lines.append(f"  identity ws5: worst |diff| = {d5[i]:.2e} at s = {grid[i]:.3f} "
                 f"(tolerance 1e-08)")
    if d5[i] > 1e-8:
        failures.append(f"ws5 off by {d5[i]:.2e} at s = {grid[i]:.3f}")


def _verify_oracle(lines: list, failures: list, pipeline: SpacingPipeline) -> None:
    grid = [0.1, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0]
    rows = oracle_compare(pipeline, grid, n_nodes=80)
    worst = max(rows, key=lambda r: abs(r[3]))
    lines.append(f"  oracle: max |E2_painleve - E2_fredholm| = {abs(worst[3]):.2e} "
                 f"at s = {worst[0]:g} (tolerance 1e-10)")
    if abs(worst[3]) > 1e-10:
        failures.append(f"oracle diff {abs(worst[3]):.2e} at s = {worst[0]:g}")


def _cmd_verify(cfg: RunConfig, suite: str, tol: float) -> int:
    lines: list = []
    failures: list = []
    pipeline = SpacingPipeline(rel_tol=cfg.rel_tol)
    if suite in ("series", "all"):
        lines.append("suite series:")
        _verify_series(lines, failures)
    if suite in ("ode", "all"):
        lines.append("suite ode:")
        _verify_ode(lines, failures, cfg.rel_tol)
    if suite in ("identities", "all"):
        lines.append("suite identities:")
        _verify_identities(lines, failures, pipeline, tol)
    if suite in ("oracle", "all"):
        lines.append("suite oracle:")
        _verify_oracle(lines, failures, pipeline)
    print("\n".join(lines))
    if failures:
        print("FAIL:")
        for f in failures:
            print(f"  {f}")
        return 1
    print("all checks passed")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="levelspacing",
        description="Exact spacing distributions of bulk-scaled random "
                    "matrix spectra, with independent referees.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, beta_required=False):
        p.add_argument("--beta", type=int, choices=BETAS,
                       required=beta_required)
        p.add_argument("--rel-tol", type=float, default=1e-12)
        p.add_argument("--output", default=None,
                       help="output file ('-' or omitted: stdout); relative "
                            f"paths resolve under ${OUTDIR_ENV} if set")

    p = sub.add_parser("tabulate", help="write an E/p/surmise table")
    common(p, beta_required=True)
    p.add_argument("--s-max", type=float, default=5.0)
    p.add_argument("--step", type=float, default=0.01)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("--suite", choices=VERIFY_SUITES, default="all")
    p.add_argument("--tol", type=float, default=1e-8,
                   help="tolerance for the derivative identities")

    p = sub.add_parser("surmise", help="deviation of the closed-form surmise")
    common(p)

    p = sub.add_parser("mc", help="Monte-Carlo spacing histogram and KS check")
    common(p)
    p.add_argument("--samples", type=int, default=4200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--window", type=float, default=0.25)
    p.add_argument("--bins", type=int, default=60)
    p.add_argument("--check", action="store_true",
                   help="exit 1 if the KS statistic exceeds the class bound")

    p = sub.add_parser("oracle-compare",
                       help="Painleve route vs Fredholm determinant")
    common(p)
    p.add_argument("--grid", default="0.1,0.5,1,1.5,2,2.5,3",
                   help="comma-separated spacing values")
    p.add_argument("--n-nodes", type=int, default=80)
    p.add_argument("--tol", type=float, default=1e-10)

    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            beta=getattr(args, "beta", None),
            s_max=getattr(args, "s_max", 5.0),
            step=getattr(args, "step", 0.01),
            rel_tol=args.rel_tol,
            output_format=getattr(args, "format", "csv"),
            output_path=getattr(args, "output", None),
            seed=getattr(args, "seed", None),
            samples=getattr(args, "samples", None),
        )
        cfg.validate()
        if args.command == "tabulate":
            return _cmd_tabulate(cfg)
        if args.command == "verify":
            return _cmd_verify(cfg, args.suite, args.tol)
        if args.command == "surmise":
            return _cmd_surmise(cfg)
        if args.command == "mc":
            return _cmd_mc(cfg, args.window, args.bins, args.check)
        if args.command == "oracle-compare":
            grid = [float(v) for v in args.grid.split(",") if v.strip()]
            if not grid:
                raise ValueError("empty grid")
            return _cmd_oracle_compare(cfg, grid, args.n_nodes, args.tol)
        raise ValueError(f"unknown command {args.command!r}")
    except (ValueError, LevelSpacingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
