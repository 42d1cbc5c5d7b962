"""Per-class confusion matrices under a multidimensional threshold, binary
scores derived from them, and their macro (unweighted mean) aggregation.

Each sample is assigned exactly one class by the thresholded rule, so for
class j it is a positive of confusion matrix j and a negative of every
other one. Degenerate ratios (0/0) evaluate to 0 by convention, which
keeps macro means finite when a class is absent or never predicted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from . import _sweep
from .errors import (
    DimensionMismatchError,
    DimensionTooSmallError,
    LabelOutOfRangeError,
    NegativeComponentError,
    SumNotOneError,
    ValidationError,
)
from .simplex import SUM_TOLERANCE, SimplexPoint


class ScoreKind(str, Enum):
    """Binary scores computable from one confusion matrix."""

    ACCURACY = "accuracy"
    F1 = "f1"
    PRECISION = "precision"
    RECALL = "recall"
    FPR = "fpr"
    TNR = "tnr"

    @classmethod
    def parse(cls, name: str) -> "ScoreKind":
        key = name.strip().lower()
        if key == "tpr":  # recall under its ROC name
            return cls.RECALL
        try:
            return cls(key)
        except ValueError:
            raise ValidationError(f"unknown score kind {name!r}") from None


@dataclass(frozen=True)
class ClassConfusion:
    """One-vs-rest counts for a single class at a single threshold."""

    tn: int
    fp: int
    fn: int
    tp: int

    def __post_init__(self) -> None:
        for name in ("tn", "fp", "fn", "tp"):
            v = getattr(self, name)
            if v < 0:
                raise ValidationError(f"{name} must be nonnegative, got {v}")

    @property
    def total(self) -> int:
        return self.tn + self.fp + self.fn + self.tp

    @property
    def positives(self) -> int:
        return self.tp + self.fn

    @property
    def negatives(self) -> int:
        return self.fp + self.tn


class LabeledPredictions:
    """n simplex-valued predictions paired with integer class labels.

    Predictions are stored as a read-only (n, m) float64 array, labels as a
    read-only (n,) int64 array. Rows are validated like simplex points;
    ``sum_tol`` can be loosened for low-precision softmax dumps.
    """

    def __init__(
        self,
        predictions: np.ndarray | Sequence[Sequence[float]] | Sequence[SimplexPoint],
        labels: np.ndarray | Sequence[int],
        *,
        sum_tol: float = SUM_TOLERANCE,
    ) -> None:
        if not isinstance(predictions, np.ndarray):
            rows = [
                p.components if isinstance(p, SimplexPoint) else tuple(p)
                for p in predictions
            ]
            preds = np.array(rows, dtype=np.float64)
        else:
            preds = np.array(predictions, dtype=np.float64)
        labs = np.array(labels, dtype=np.int64)
        if preds.ndim != 2 or preds.shape[0] == 0:
            raise ValidationError("predictions must be a non-empty 2-D table")
        n, m = preds.shape
        if m < 2:
            raise DimensionTooSmallError(f"need at least 2 classes, got {m}")
        if labs.shape != (n,):
            raise ValidationError(
                f"got {labs.shape[0] if labs.ndim == 1 else '?'} labels "
                f"for {n} predictions"
            )
        if np.any(preds < 0.0) or not np.all(np.isfinite(preds)):
            bad = int(np.argwhere((preds < 0.0) | ~np.isfinite(preds))[0][0])
            raise NegativeComponentError(f"prediction {bad} has a negative component")
        off = np.abs(preds.sum(axis=1) - 1.0)
        if np.any(off > sum_tol):
            bad = int(np.argmax(off))
            raise SumNotOneError(
                f"prediction {bad} sums to {preds[bad].sum()!r}, not 1"
            )
        if np.any(labs < 0) or np.any(labs >= m):
            bad = int(np.argwhere((labs < 0) | (labs >= m))[0][0])
            raise LabelOutOfRangeError(bad, f"label {labs[bad]} not in 0..{m - 1}")
        preds.setflags(write=False)
        labs.setflags(write=False)
        self._predictions = preds
        self._labels = labs
        counts = np.bincount(labs, minlength=m)
        counts.setflags(write=False)
        self._class_counts = counts

    @property
    def predictions(self) -> np.ndarray:
        return self._predictions

    @property
    def labels(self) -> np.ndarray:
        return self._labels

    @property
    def class_counts(self) -> np.ndarray:
        """Per-class label counts n_j."""
        return self._class_counts

    @property
    def n(self) -> int:
        return self._predictions.shape[0]

    @property
    def m(self) -> int:
        return self._predictions.shape[1]

    def prediction_point(self, i: int) -> SimplexPoint:
        return SimplexPoint(tuple(self._predictions[i]))


def _tau_row(data: LabeledPredictions, tau: SimplexPoint) -> np.ndarray:
    if tau.dimension != data.m:
        raise DimensionMismatchError(
            f"threshold has {tau.dimension} components, data has {data.m} classes"
        )
    return tau.as_array()[None, :]


def confusion_matrices(
    data: LabeledPredictions, tau: SimplexPoint
) -> list[ClassConfusion]:
    """One confusion matrix per class under the thresholded rule at ``tau``."""
    counts = _sweep.sweep_counts(data.predictions, data.labels, _tau_row(data, tau))
    return [
        ClassConfusion(tn=int(c[0]), fp=int(c[1]), fn=int(c[2]), tp=int(c[3]))
        for c in counts[0]
    ]


def score(cm: ClassConfusion, kind: ScoreKind) -> float:
    """A binary score in [0, 1] from one confusion matrix (0/0 -> 0)."""
    tn, fp, fn, tp = cm.tn, cm.fp, cm.fn, cm.tp
    if kind is ScoreKind.ACCURACY:
        return (tp + tn) / cm.total
    if kind is ScoreKind.PRECISION:
        return tp / (tp + fp) if tp + fp > 0 else 0.0
    if kind is ScoreKind.RECALL:
        return tp / (tp + fn) if tp + fn > 0 else 0.0
    if kind is ScoreKind.FPR:
        return fp / (fp + tn) if fp + tn > 0 else 0.0
    if kind is ScoreKind.TNR:
        fpr = fp / (fp + tn) if fp + tn > 0 else 0.0
        return 1.0 - fpr
    if kind is ScoreKind.F1:
        den = 2 * tp + fp + fn
        return 2 * tp / den if den > 0 else 0.0
    raise ValidationError(f"unknown score kind {kind!r}")


def score_vector(
    data: LabeledPredictions, tau: SimplexPoint, kind: ScoreKind
) -> np.ndarray:
    """The m per-class scores at ``tau`` as a float64 vector."""
    counts = _sweep.sweep_counts(data.predictions, data.labels, _tau_row(data, tau))
    return _sweep.scores_from_counts(counts, kind)[0]


def macro_score(
    data: LabeledPredictions, tau: SimplexPoint, kind: ScoreKind
) -> float:
    """Unweighted mean of the per-class scores at ``tau``."""
    return float(score_vector(data, tau, kind).mean())
