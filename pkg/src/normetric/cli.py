"""Command-line front end: evaluate, curve, expand, and report subcommands.

Exit codes: 0 success, 1 usage error, 2 data error (bad or missing files),
3 numeric or domain error.  Diagnostics go to stderr; results go to stdout
or to the requested output files.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from typing import Optional, Sequence

import numpy as np

from .data import load_csv, save_csv, schedule, synthetic_expand
from .exceptions import DataError, NormetricError
from .factors import EvaluationBundle, MetricBreakdown, TaskKind, evaluate
from .harness import (
    LearnerConfig,
    format_report_json,
    format_series_csv,
    parse_series_csv,
    run_curve,
    stability_report,
)
from .metrics import accuracy, mape_score, nmi

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3


class _UsageError(Exception):
    """Flag combinations argparse alone cannot reject."""


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this tool reserves 2 for data."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _breakdown_json(breakdown: MetricBreakdown) -> str:
    def jsonable(value: float):
        return value if math.isfinite(value) else str(value)

    fields = {
        "base": breakdown.base,
        "dim_factor_f": breakdown.dim_factor_f,
        "snr_db": breakdown.snr_db,
        "snr_normalized": breakdown.snr_normalized,
        "snr_factor_g": breakdown.snr_factor_g,
        "imbalance_ratio": breakdown.imbalance_ratio,
        "imbalance_factor_h": breakdown.imbalance_factor_h,
        "normalized": breakdown.normalized,
    }
    return json.dumps({key: jsonable(value) for key, value in fields.items()}, indent=2)


def _read_predictions(path: str, task: TaskKind) -> dict:
    """Load a predictions CSV into arrays keyed by column role.

    Expected columns: y_true and y_pred always; y_prob (probability of the
    predicted class) for binary; p_0..p_{C-1} probability vectors for
    multiclass.  Clustering files carry cluster ids in y_pred.
    """
    if not os.path.isfile(path):
        raise DataError(f"no such file: {path}")
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"{path} is empty (no header row)") from None
        rows = [row for row in reader if row]

    def column(name: str) -> np.ndarray:
        if name not in header:
            raise DataError(f"predictions file {path} lacks a {name!r} column")
        index = header.index(name)
        try:
            return np.array([float(row[index]) for row in rows])
        except (ValueError, IndexError) as exc:
            raise DataError(f"bad value in column {name!r} of {path}: {exc}") from None

    if not rows:
        raise DataError(f"predictions file {path} has no data rows")

    out = {"y_true": column("y_true"), "y_pred": column("y_pred")}
    if task is TaskKind.BINARY_CLASSIFICATION:
        out["y_prob"] = column("y_prob")
    elif task is TaskKind.MULTICLASS_CLASSIFICATION:
        prob_names = sorted(
            (name for name in header if name.startswith("p_") and name[2:].isdigit()),
            key=lambda name: int(name[2:]),
        )
        if not prob_names:
            raise DataError(f"predictions file {path} lacks p_0..p_(C-1) columns")
        if [int(name[2:]) for name in prob_names] != list(range(len(prob_names))):
            raise DataError(f"probability columns must be contiguous p_0..p_(C-1), got {prob_names}")
        out["proba"] = np.column_stack([column(name) for name in prob_names])
    return out


def cmd_evaluate(args: argparse.Namespace) -> int:
    task = TaskKind(args.task)
    data = _read_predictions(args.predictions, task)
    y_true, y_pred = data["y_true"], data["y_pred"]

    if task is TaskKind.REGRESSION:
        base = mape_score(y_true, y_pred)
        bundle = EvaluationBundle(task, y_true, y_pred, args.d, args.n, base)
    elif task is TaskKind.BINARY_CLASSIFICATION:
        y_true, y_pred = y_true.astype(int), y_pred.astype(int)
        base = accuracy(y_true, y_pred)
        bundle = EvaluationBundle(
            task, y_true, y_pred, args.d, args.n, base,
            y_prob=data["y_prob"], class_sizes=np.bincount(y_true),
        )
    elif task is TaskKind.MULTICLASS_CLASSIFICATION:
        y_true, y_pred = y_true.astype(int), y_pred.astype(int)
        base = accuracy(y_true, y_pred)
        bundle = EvaluationBundle(
            task, y_true, y_pred, args.d, args.n, base,
            y_prob=data["proba"], class_sizes=np.bincount(y_true),
        )
    else:
        y_true, y_pred = y_true.astype(int), y_pred.astype(int)
        base = nmi(y_true, y_pred)
        cluster_sizes = np.bincount(y_pred)
        bundle = EvaluationBundle(
            task, y_true, y_pred, args.d, args.n, base,
            class_sizes=cluster_sizes[cluster_sizes > 0],
        )

    print(_breakdown_json(evaluate(bundle)))
    return EXIT_OK


def _write_or_print(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_curve(args: argparse.Namespace) -> int:
    task = TaskKind(args.task)
    ds = load_csv(args.data, args.target_column, task)
    if ds.n_dropped:
        print(f"note: dropped {ds.n_dropped} unusable rows from {args.data}", file=sys.stderr)
    sched = schedule(args.start, args.stop, args.step)
    config = LearnerConfig(
        test_fraction=args.test_fraction,
        epochs=args.epochs,
        learning_rate=args.lr,
        n_clusters=args.k,
    )
    points = run_curve(ds, sched, task, config, seed=args.seed, d=args.d)
    report = stability_report(points, d=args.d if args.d is not None else ds.d, n_star=args.n_star)

    series_text = format_series_csv(points, smooth_window=args.smooth_window)
    report_text = format_report_json(report)
    if args.series is None and args.report is None:
        sys.stdout.write(report_text)
        return EXIT_OK
    if args.series is not None:
        _write_or_print(series_text, args.series)
    if args.report is not None:
        _write_or_print(report_text, args.report)
    return EXIT_OK


def cmd_expand(args: argparse.Namespace) -> int:
    task = TaskKind(args.task)
    ds = load_csv(args.data, args.target_column, task)
    if ds.n_dropped:
        print(f"note: dropped {ds.n_dropped} unusable rows from {args.data}", file=sys.stderr)
    expanded = synthetic_expand(ds, args.target_n, args.k_neighbors, args.seed)
    save_csv(expanded, args.out)
    print(f"wrote {expanded.n} rows ({expanded.n - ds.n} synthetic) to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    if args.d is None and args.n_star is None:
        raise _UsageError("report needs --d or --n-star to locate the threshold")
    points = parse_series_csv(args.series)
    report = stability_report(points, d=args.d, n_star=args.n_star, mad_scope=args.mad_scope)
    _write_or_print(format_report_json(report), args.report)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="normetric", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)
    tasks = [kind.value for kind in TaskKind]

    ev = commands.add_parser("evaluate", help="one-shot adjusted metric from a predictions file")
    ev.add_argument("--task", required=True, choices=tasks)
    ev.add_argument("--predictions", required=True, help="CSV of y_true, y_pred[, probabilities]")
    ev.add_argument("--d", type=int, required=True, help="feature count of the evaluated model")
    ev.add_argument("--n", type=int, required=True, help="training-set size of the evaluated model")
    ev.set_defaults(func=cmd_evaluate)

    cv = commands.add_parser("curve", help="learning-curve experiment over a dataset CSV")
    cv.add_argument("--task", required=True, choices=tasks)
    cv.add_argument("--data", required=True, help="dataset CSV with a header row")
    cv.add_argument("--target-column", required=True)
    cv.add_argument("--start", type=int, required=True)
    cv.add_argument("--stop", type=int, required=True)
    cv.add_argument("--step", type=int, required=True)
    cv.add_argument("--series", default=None, help="write the per-size series CSV here")
    cv.add_argument("--report", default=None, help="write the stability report JSON here")
    cv.add_argument("--seed", type=int, default=42)
    cv.add_argument("--test-fraction", type=float, default=0.2)
    cv.add_argument("--d", type=int, default=None, help="override the feature count")
    cv.add_argument("--n-star", type=int, default=None, help="override the 20*d threshold")
    cv.add_argument("--smooth-window", type=int, default=5, help="odd window for display smoothing")
    cv.add_argument("--epochs", type=int, default=500)
    cv.add_argument("--lr", type=float, default=0.1)
    cv.add_argument("--k", type=int, default=None, help="cluster count (clustering task)")
    cv.set_defaults(func=cmd_curve)

    ex = commands.add_parser("expand", help="synthetic nearest-neighbor expansion to a new CSV")
    ex.add_argument("--task", required=True, choices=tasks)
    ex.add_argument("--data", required=True)
    ex.add_argument("--target-column", required=True)
    ex.add_argument("--target-n", type=int, required=True)
    ex.add_argument("--k-neighbors", type=int, default=5)
    ex.add_argument("--out", required=True, help="destination CSV")
    ex.add_argument("--seed", type=int, default=42)
    ex.set_defaults(func=cmd_expand)

    rp = commands.add_parser("report", help="recompute a stability report from a series CSV")
    rp.add_argument("--series", required=True, help="series CSV produced by the curve subcommand")
    rp.add_argument("--d", type=int, default=None)
    rp.add_argument("--n-star", type=int, default=None)
    rp.add_argument("--mad-scope", choices=["all", "before"], default="all")
    rp.add_argument("--report", default=None, help="write JSON here instead of stdout")
    rp.set_defaults(func=cmd_report)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"normetric: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"normetric: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"normetric: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (NormetricError, ValueError, ArithmeticError) as exc:
        print(f"normetric: error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
