"""File formats: prediction/threshold CSVs, landscape and cloud exports,
and the JSON run report.

All floats are written with 9 significant digits, which round-trips
through ``float()`` so that write -> parse -> write reproduces the data
rows byte for byte.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any, Iterable

import numpy as np

from .errors import (
    LabelOutOfRangeError,
    MalformedHeaderError,
    RowValidationError,
    ValidationError,
)
from .metrics import LabeledPredictions, ScoreKind
from .roc import DfpSummary, OvrCurve, RocCloud
from .simplex import SUM_TOLERANCE, ThresholdSet
from .tuning import TuningReport


def format_float(x: float) -> str:
    return f"{x:.9g}"


def _prediction_header(m: int) -> list[str]:
    return [f"p{j}" for j in range(m)] + ["label"]


def _threshold_header(m: int) -> list[str]:
    return [f"t{j}" for j in range(m)]


def write_predictions(path: str | Path, data: LabeledPredictions) -> None:
    """Write a prediction dump: header ``p0..p{m-1},label``, one row per sample."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_prediction_header(data.m))
        for row, label in zip(data.predictions, data.labels):
            writer.writerow([format_float(v) for v in row] + [str(int(label))])


def parse_predictions(
    path: str | Path, *, sum_tol: float = SUM_TOLERANCE
) -> LabeledPredictions:
    """Parse a prediction dump, reporting 1-based line numbers on bad rows."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise MalformedHeaderError("empty file") from None
        header = [h.strip() for h in header]
        if len(header) < 3 or header[-1] != "label":
            raise MalformedHeaderError(
                f"expected p0..p{{m-1}},label, got {','.join(header)!r}"
            )
        m = len(header) - 1
        if header[:-1] != [f"p{j}" for j in range(m)]:
            raise MalformedHeaderError(
                f"expected p0..p{m - 1},label, got {','.join(header)!r}"
            )

        rows: list[list[float]] = []
        labels: list[int] = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != m + 1:
                raise RowValidationError(
                    lineno, f"expected {m + 1} fields, got {len(row)}"
                )
            try:
                probs = [float(v) for v in row[:-1]]
            except ValueError:
                raise RowValidationError(lineno, "non-numeric probability") from None
            try:
                label = int(row[-1])
            except ValueError:
                raise RowValidationError(lineno, "non-integer label") from None
            if any(v < 0.0 for v in probs):
                raise RowValidationError(lineno, "negative probability")
            if abs(sum(probs) - 1.0) > sum_tol:
                raise RowValidationError(
                    lineno, f"probabilities sum to {sum(probs)!r}, not 1"
                )
            if not 0 <= label < m:
                raise LabelOutOfRangeError(lineno, f"label {label} not in 0..{m - 1}")
            rows.append(probs)
            labels.append(label)

    if not rows:
        raise ValidationError(f"{path}: no data rows")
    return LabeledPredictions(
        np.array(rows, dtype=np.float64),
        np.array(labels, dtype=np.int64),
        sum_tol=sum_tol,
    )


def write_thresholds(path: str | Path, thresholds: ThresholdSet) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_threshold_header(thresholds.m))
        for row in thresholds.array:
            writer.writerow([format_float(v) for v in row])


def read_thresholds(path: str | Path) -> ThresholdSet:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise MalformedHeaderError("empty file") from None
        m = len(header)
        if m < 2 or header != [f"t{j}" for j in range(m)]:
            raise MalformedHeaderError(
                f"expected t0..t{{m-1}}, got {','.join(header)!r}"
            )
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != m:
                raise RowValidationError(lineno, f"expected {m} fields, got {len(row)}")
            try:
                rows.append([float(v) for v in row])
            except ValueError:
                raise RowValidationError(lineno, "non-numeric threshold") from None
    if not rows:
        raise ValidationError(f"{path}: no data rows")
    return ThresholdSet(np.array(rows, dtype=np.float64), provenance="explicit")


def write_landscape(path: str | Path, report: TuningReport) -> None:
    """Per-threshold scores: ``t0..t{m-1},macro,s0..s{m-1}``."""
    if report.macro_scores is None or report.class_scores is None:
        raise ValidationError("report was produced in streaming mode, no landscape kept")
    m = report.thresholds.m
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_threshold_header(m) + ["macro"] + [f"s{j}" for j in range(m)])
        arr = report.thresholds.array
        for i in range(len(report.thresholds)):
            writer.writerow(
                [format_float(v) for v in arr[i]]
                + [format_float(report.macro_scores[i])]
                + [format_float(v) for v in report.class_scores[i]]
            )


def write_cloud(path: str | Path, cloud: RocCloud) -> None:
    """Cloud points: ``class,k,t0..t{m-1},fpr,tpr``, class-major order."""
    if cloud.thresholds is None:
        raise ValidationError("cloud has no threshold set attached")
    m = cloud.num_classes
    arr = cloud.thresholds.array
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["class", "k"] + _threshold_header(m) + ["fpr", "tpr"])
        for j in range(m):
            for k in range(cloud.num_thresholds):
                writer.writerow(
                    [str(j), str(k)]
                    + [format_float(v) for v in arr[k]]
                    + [format_float(cloud.fpr[k, j]), format_float(cloud.tpr[k, j])]
                )


def write_ovr_curves(path: str | Path, curves: Iterable[OvrCurve | None]) -> None:
    """Step-curve vertices for all non-degenerate classes: ``class,fpr,tpr``."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["class", "fpr", "tpr"])
        for curve in curves:
            if curve is None:
                continue
            for x, y in zip(curve.fpr, curve.tpr):
                writer.writerow(
                    [str(curve.class_index), format_float(x), format_float(y)]
                )


def build_report(
    *,
    m: int,
    n: int,
    score_kind: ScoreKind | None,
    sampler: str,
    num_thresholds: int,
    seed: int | None,
    tuning: TuningReport | None = None,
    dfp_summary: DfpSummary | None = None,
    ovr_aucs: list[float | None] | None = None,
    artifacts: dict[str, str] | None = None,
) -> dict[str, Any]:
    """Assemble the JSON-serializable run report."""
    report: dict[str, Any] = {
        "meta": {
            "m": m,
            "n": n,
            "score_kind": score_kind.value if score_kind else None,
            "sampler": sampler,
            "M": num_thresholds,
            "seed": seed,
        },
        "tuning": None,
        "dfp": None,
        "artifacts": artifacts or {},
    }
    if tuning is not None:
        report["tuning"] = {
            "best_threshold": list(tuning.best_threshold.components),
            "best_score": tuning.best_score,
            "baseline_argmax_score": tuning.baseline_argmax_score,
            "delta": tuning.delta,
        }
    if dfp_summary is not None:
        report["dfp"] = {
            "per_class": list(dfp_summary.per_class),
            "overall": dfp_summary.overall,
        }
    if ovr_aucs is not None:
        report["ovr_auc"] = ovr_aucs
    return report


def write_report(path: str | Path, report: dict[str, Any]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")


def read_report(path: str | Path) -> dict[str, Any]:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
