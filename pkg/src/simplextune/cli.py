"""Command-line driver.

Subcommands:
    tune       sweep thresholds on a prediction dump, emit report + landscape
    roc        build per-class operating-point clouds, DFP summary, OvR curves
    eval       score one fixed threshold on a prediction dump
    synth      generate a synthetic prediction dump from a JSON config
    grid-info  print the cardinality of a simplex grid

Exit codes: 0 success, 1 usage, 2 I/O, 3 validation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .errors import SimplexTuneError, UsageError, ValidationError
from .metrics import ScoreKind, macro_score, score_vector
from .roc import dfp, ovr_curves, roc_cloud
from .simplex import ThresholdSet, dirichlet_sample, grid, grid_size, make_point
from .synth import SynthSpec, generate
from .tuning import tune

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_VALIDATION = 3


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so we control exit codes."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="simplextune", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sampler_args(p: _Parser) -> None:
        p.add_argument("--sampler", choices=["grid", "dirichlet"], default="grid")
        p.add_argument("--resolution", type=int, help="grid steps per axis")
        p.add_argument("--samples", type=int, help="number of random thresholds")
        p.add_argument("--seed", type=int, help="RNG seed (required for dirichlet)")
        p.add_argument("--threads", type=int, default=None)

    p_tune = sub.add_parser("tune", help="search for the best threshold")
    p_tune.add_argument("--input", required=True)
    p_tune.add_argument(
        "--metric", default="f1", choices=[k.value for k in ScoreKind]
    )
    add_sampler_args(p_tune)
    p_tune.add_argument("--out", required=True, help="output directory")
    p_tune.add_argument("--max-entries", type=int, default=None)

    p_roc = sub.add_parser("roc", help="operating-point clouds and DFP")
    p_roc.add_argument("--input", required=True)
    add_sampler_args(p_roc)
    p_roc.add_argument("--out", required=True, help="output directory")

    p_eval = sub.add_parser("eval", help="score a fixed threshold")
    p_eval.add_argument("--input", required=True)
    p_eval.add_argument("--tau", required=True, help="comma-separated components")
    p_eval.add_argument(
        "--metric", default="f1", choices=[k.value for k in ScoreKind]
    )

    p_synth = sub.add_parser("synth", help="generate synthetic predictions")
    p_synth.add_argument("--config", required=True, help="JSON spec")
    p_synth.add_argument("--out", required=True, help="output CSV path")

    p_info = sub.add_parser("grid-info", help="print grid cardinality")
    p_info.add_argument("-m", "--classes", type=int, required=True)
    p_info.add_argument("-k", "--resolution", type=int, required=True)

    return parser


def _make_thresholds(args: argparse.Namespace, m: int) -> ThresholdSet:
    if args.sampler == "grid":
        if args.resolution is None:
            raise UsageError("--resolution is required with --sampler grid")
        return grid(m, args.resolution)
    if args.samples is None:
        raise UsageError("--samples is required with --sampler dirichlet")
    if args.seed is None:
        raise UsageError("--seed is required with --sampler dirichlet")
    return dirichlet_sample(m, args.samples, args.seed)


def _cmd_tune(args: argparse.Namespace) -> int:
    data = io.parse_predictions(args.input)
    thresholds = _make_thresholds(args, data.m)
    kind = ScoreKind(args.metric)
    report = tune(
        data, thresholds, kind, threads=args.threads, max_entries=args.max_entries
    )
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    artifacts = {}
    if report.macro_scores is not None:
        landscape = out_dir / "landscape.csv"
        io.write_landscape(landscape, report)
        artifacts["landscape_csv"] = str(landscape)
    doc = io.build_report(
        m=data.m,
        n=data.n,
        score_kind=kind,
        sampler=report.thresholds.provenance,
        num_thresholds=len(report.thresholds),
        seed=args.seed,
        tuning=report,
        artifacts=artifacts,
    )
    report_path = out_dir / "report.json"
    io.write_report(report_path, doc)
    print(
        f"best {kind.value}={report.best_score:.6f} "
        f"(argmax baseline {report.baseline_argmax_score:.6f}, "
        f"delta {report.delta:+.6f}) at tau="
        f"({', '.join(io.format_float(c) for c in report.best_threshold)})"
    )
    print(f"report: {report_path}")
    return EXIT_OK


def _cmd_roc(args: argparse.Namespace) -> int:
    data = io.parse_predictions(args.input)
    thresholds = _make_thresholds(args, data.m)
    cloud = roc_cloud(data, thresholds, threads=args.threads)
    summary = dfp(cloud)
    curves = ovr_curves(data)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    cloud_path = out_dir / "cloud.csv"
    curves_path = out_dir / "ovr_curves.csv"
    io.write_cloud(cloud_path, cloud)
    io.write_ovr_curves(curves_path, curves)
    doc = io.build_report(
        m=data.m,
        n=data.n,
        score_kind=None,
        sampler=thresholds.provenance,
        num_thresholds=len(thresholds),
        seed=args.seed,
        dfp_summary=summary,
        ovr_aucs=[None if c is None else c.auc for c in curves],
        artifacts={"cloud_csv": str(cloud_path), "ovr_curves_csv": str(curves_path)},
    )
    report_path = out_dir / "report.json"
    io.write_report(report_path, doc)
    print(
        f"dfp overall={summary.overall:.6f} per-class="
        f"({', '.join(f'{v:.6f}' for v in summary.per_class)})"
    )
    print(f"report: {report_path}")
    return EXIT_OK


def _cmd_eval(args: argparse.Namespace) -> int:
    data = io.parse_predictions(args.input)
    try:
        components = [float(v) for v in args.tau.split(",")]
    except ValueError:
        raise ValidationError(f"--tau is not a comma-separated float list: {args.tau!r}")
    tau = make_point(components)
    kind = ScoreKind(args.metric)
    per_class = score_vector(data, tau, kind)
    result = {
        "score_kind": kind.value,
        "tau": list(tau.components),
        "macro": macro_score(data, tau, kind),
        "per_class": [float(v) for v in per_class],
    }
    print(json.dumps(result))
    return EXIT_OK


def _cmd_synth(args: argparse.Namespace) -> int:
    spec = SynthSpec.from_json(args.config)
    data = generate(spec)
    io.write_predictions(args.out, data)
    print(f"wrote {data.n} samples ({data.m} classes) to {args.out}")
    return EXIT_OK


def _cmd_grid_info(args: argparse.Namespace) -> int:
    print(grid_size(args.classes, args.resolution))
    return EXIT_OK


_COMMANDS = {
    "tune": _cmd_tune,
    "roc": _cmd_roc,
    "eval": _cmd_eval,
    "synth": _cmd_synth,
    "grid-info": _cmd_grid_info,
}


def run_cli(argv: list[str] | None = None) -> int:
    """Run one CLI invocation; returns the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"error: validation: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except SimplexTuneError as exc:
        print(f"error: validation: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
