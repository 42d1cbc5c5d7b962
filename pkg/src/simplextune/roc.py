"""ROC analysis driven by a single multidimensional threshold.

Sweeping one simplex threshold over a candidate set gives, per class, a
cloud of jointly attainable (FPR, TPR) operating points; all classes' points
at index k come from the same threshold. Each cloud is summarized by its
mean L1 distance from the ideal corner (0, 1): 0 is perfect, 1 matches the
random diagonal, 2 is the worst corner. Classical per-class curves obtained
by sweeping a scalar cut on one coordinate are provided as the reference
baseline, with trapezoidal AUC.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _sweep
from .errors import (
    DegenerateClassError,
    DimensionMismatchError,
    EmptyCloudError,
    ValidationError,
)
from .metrics import LabeledPredictions
from .simplex import ThresholdSet


@dataclass
class RocCloud:
    """Per-class (FPR, TPR) points, one row per threshold.

    ``fpr`` and ``tpr`` are (M, m) arrays aligned index-wise with the
    threshold set that produced them (kept in ``thresholds`` when known).
    """

    fpr: np.ndarray
    tpr: np.ndarray
    thresholds: ThresholdSet | None = None

    def __post_init__(self) -> None:
        fpr = np.array(self.fpr, dtype=np.float64)
        tpr = np.array(self.tpr, dtype=np.float64)
        if fpr.ndim != 2 or fpr.shape != tpr.shape:
            raise ValidationError(
                f"fpr/tpr must be equal-shape 2-D arrays, got {fpr.shape} and {tpr.shape}"
            )
        for name, a in (("fpr", fpr), ("tpr", tpr)):
            if a.size and (np.any(a < 0.0) or np.any(a > 1.0) or not np.all(np.isfinite(a))):
                raise ValidationError(f"{name} values must lie in [0, 1]")
        fpr.setflags(write=False)
        tpr.setflags(write=False)
        self.fpr = fpr
        self.tpr = tpr

    @property
    def num_thresholds(self) -> int:
        return self.fpr.shape[0]

    @property
    def num_classes(self) -> int:
        return self.fpr.shape[1]

    def points(self, class_index: int) -> np.ndarray:
        """(M, 2) array of (fpr, tpr) pairs for one class."""
        return np.column_stack([self.fpr[:, class_index], self.tpr[:, class_index]])


@dataclass(frozen=True)
class DfpSummary:
    """Mean L1 distance from (0, 1), per class and averaged."""

    per_class: tuple[float, ...]
    overall: float

    def __post_init__(self) -> None:
        for v in self.per_class + (self.overall,):
            if not (0.0 <= v <= 2.0):
                raise ValidationError(f"distance summary {v!r} outside [0, 2]")


@dataclass
class OvrCurve:
    """Classical one-vs-rest step curve for a single class.

    Vertices run from (0, 0) to (1, 1) with samples of equal score merged
    into a single step, and ``auc`` is the trapezoidal area (equivalent to
    rank counting with half credit for ties).
    """

    class_index: int
    fpr: np.ndarray
    tpr: np.ndarray
    auc: float

    def __post_init__(self) -> None:
        fpr = np.asarray(self.fpr, dtype=np.float64)
        tpr = np.asarray(self.tpr, dtype=np.float64)
        if fpr.shape != tpr.shape or fpr.ndim != 1 or fpr.shape[0] < 2:
            raise ValidationError("curve needs matching 1-D vertex arrays")
        if fpr[0] != 0.0 or tpr[0] != 0.0 or fpr[-1] != 1.0 or tpr[-1] != 1.0:
            raise ValidationError("curve must run from (0,0) to (1,1)")
        if np.any(np.diff(fpr) < 0.0):
            raise ValidationError("fpr must be non-decreasing along the curve")
        self.fpr = fpr
        self.tpr = tpr


def roc_cloud(
    data: LabeledPredictions,
    thresholds: ThresholdSet,
    *,
    threads: int | None = None,
    chunk_size: int = _sweep.DEFAULT_CHUNK,
) -> RocCloud:
    """Evaluate exactly the supplied thresholds and collect per-class rates.

    A class with no positives (or no negatives) gets rate 0 from the 0/0
    convention rather than an error, mirroring the confusion scores.
    """
    if thresholds.m != data.m:
        raise DimensionMismatchError(
            f"thresholds have {thresholds.m} components, data has {data.m} classes"
        )
    counts = _sweep.sweep_counts(
        data.predictions,
        data.labels,
        thresholds.array,
        threads=threads,
        chunk_size=chunk_size,
    )
    fpr, tpr = _sweep.rates_from_counts(counts)
    return RocCloud(fpr=fpr, tpr=tpr, thresholds=thresholds)


def dfp(cloud: RocCloud) -> DfpSummary:
    """Summarize a cloud by mean L1 distance from the ideal point (0, 1).

    The mean runs over every supplied threshold; coincident points are
    counted as often as they occur.
    """
    if cloud.num_thresholds == 0:
        raise EmptyCloudError("cannot summarize an empty cloud")
    dist = cloud.fpr + (1.0 - cloud.tpr)
    per_class = dist.mean(axis=0)
    return DfpSummary(
        per_class=tuple(float(v) for v in per_class),
        overall=float(per_class.mean()),
    )


def ovr_curve(data: LabeledPredictions, class_index: int) -> OvrCurve:
    """Classical one-vs-rest ROC curve for ``class_index``.

    The class score is the prediction's coordinate for that class; samples
    are swept from high to low score with tied scores grouped into one
    step. Raises :class:`DegenerateClassError` when the class has zero
    positives or zero negatives, since no ranking curve exists then.
    """
    if not 0 <= class_index < data.m:
        raise ValidationError(f"class index {class_index} not in 0..{data.m - 1}")
    scores = data.predictions[:, class_index]
    positive = data.labels == class_index
    p = int(positive.sum())
    n_neg = data.n - p
    if p == 0:
        raise DegenerateClassError(class_index, "no positive samples")
    if n_neg == 0:
        raise DegenerateClassError(class_index, "no negative samples")

    order = np.argsort(-scores, kind="stable")
    s_sorted = scores[order]
    pos_sorted = positive[order].astype(np.int64)
    # Last position of each tied-score group.
    group_end = np.flatnonzero(np.diff(s_sorted) != 0.0)
    group_end = np.append(group_end, data.n - 1)
    cum_tp = np.cumsum(pos_sorted)[group_end]
    cum_fp = (group_end + 1) - cum_tp
    fpr = np.concatenate([[0.0], cum_fp / n_neg])
    tpr = np.concatenate([[0.0], cum_tp / p])
    auc = float(np.sum(np.diff(fpr) * (tpr[1:] + tpr[:-1]) / 2.0))
    return OvrCurve(class_index=class_index, fpr=fpr, tpr=tpr, auc=auc)


def ovr_curves(data: LabeledPredictions) -> list[OvrCurve | None]:
    """One curve per class; None where the class is degenerate."""
    out: list[OvrCurve | None] = []
    for j in range(data.m):
        try:
            out.append(ovr_curve(data, j))
        except DegenerateClassError:
            out.append(None)
    return out
