"""Exhaustive threshold search maximizing a macro score.

Every candidate threshold is scored on the full dataset; the best one is
returned together with the whole score landscape. The barycenter is always
among the evaluated candidates, so the selected threshold can never score
below the plain-argmax baseline on the tuning data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from . import _sweep
from .errors import DimensionMismatchError, EmptyThresholdSetError
from .metrics import LabeledPredictions, ScoreKind
from .simplex import SimplexPoint, ThresholdSet


class TuningEntry(NamedTuple):
    threshold: SimplexPoint
    macro: float
    per_class: tuple[float, ...]


@dataclass
class TuningReport:
    """Full result of a tuning sweep.

    ``thresholds`` is the set that was actually evaluated (the input set,
    with the barycenter appended when it was missing). ``macro_scores`` and
    ``class_scores`` are aligned with it; both are None when the sweep ran
    in streaming mode and the landscape was not retained.
    """

    thresholds: ThresholdSet
    score_kind: ScoreKind
    macro_scores: np.ndarray | None
    class_scores: np.ndarray | None
    best_index: int
    best_threshold: SimplexPoint
    best_score: float
    baseline_argmax_score: float

    @property
    def delta(self) -> float:
        """Improvement of the tuned threshold over the argmax baseline."""
        return self.best_score - self.baseline_argmax_score

    def __len__(self) -> int:
        return len(self.thresholds)

    def iter_entries(self) -> Iterator[TuningEntry]:
        if self.macro_scores is None or self.class_scores is None:
            return
        arr = self.thresholds.array
        for i in range(len(self.thresholds)):
            yield TuningEntry(
                SimplexPoint(tuple(arr[i])),
                float(self.macro_scores[i]),
                tuple(float(s) for s in self.class_scores[i]),
            )

    @property
    def entries(self) -> list[TuningEntry]:
        return list(self.iter_entries())


def _candidate_key(
    macro: float, row: np.ndarray, center: np.ndarray
) -> tuple[float, float, tuple[float, ...]]:
    """Total order used to break score ties: higher score first, then
    smaller L1 distance from the barycenter, then lexicographically
    smaller coordinates. Minimizing this key selects the winner."""
    return (-macro, float(np.abs(row - center).sum()), tuple(row))


def _select_best(macro: np.ndarray, arr: np.ndarray) -> int:
    best = macro.max()
    cand = np.flatnonzero(macro == best)
    if len(cand) == 1:
        return int(cand[0])
    m = arr.shape[1]
    center = np.full(m, 1.0 / m)
    dists = np.abs(arr[cand] - center).sum(axis=1)
    cand = cand[dists == dists.min()]
    if len(cand) == 1:
        return int(cand[0])
    return int(min(cand, key=lambda i: tuple(arr[int(i)])))


def tune(
    data: LabeledPredictions,
    thresholds: ThresholdSet,
    kind: ScoreKind = ScoreKind.F1,
    *,
    threads: int | None = None,
    chunk_size: int = _sweep.DEFAULT_CHUNK,
    max_entries: int | None = None,
) -> TuningReport:
    """Score every threshold and pick the macro-score maximizer.

    Args:
        data: labeled prediction set to score against.
        thresholds: candidate thresholds; the barycenter is appended for the
            sweep if absent, so the report baseline is always a candidate.
        kind: which binary score to macro-average.
        threads: worker threads for the sweep (default: machine parallelism).
            The report is identical for every value.
        chunk_size: thresholds per work unit.
        max_entries: when the evaluated set is larger than this, keep only
            the running best instead of the full landscape.

    Returns:
        A :class:`TuningReport`; ``best_score >= baseline_argmax_score``
        always holds on the tuning data.
    """
    if len(thresholds) == 0:
        raise EmptyThresholdSetError("no thresholds to evaluate")
    if thresholds.m != data.m:
        raise DimensionMismatchError(
            f"thresholds have {thresholds.m} components, data has {data.m} classes"
        )
    ts = thresholds.with_barycenter()
    arr = ts.array
    total = len(ts)
    bary_idx = ts.barycenter_index()
    assert bary_idx is not None

    streaming = max_entries is not None and total > max_entries
    if not streaming:
        counts = _sweep.sweep_counts(
            data.predictions, data.labels, arr, threads=threads, chunk_size=chunk_size
        )
        class_scores = _sweep.scores_from_counts(counts, kind)
        macro = class_scores.mean(axis=1)
        best_index = _select_best(macro, arr)
        return TuningReport(
            thresholds=ts,
            score_kind=kind,
            macro_scores=macro,
            class_scores=class_scores,
            best_index=best_index,
            best_threshold=SimplexPoint(tuple(arr[best_index])),
            best_score=float(macro[best_index]),
            baseline_argmax_score=float(macro[bary_idx]),
        )

    # Streaming sweep: per-chunk winners reduced under the same total order,
    # which is associative, so the outcome is worker-count independent.
    m = ts.m
    center = np.full(m, 1.0 / m)
    chunk_best: dict[int, tuple] = {}
    baseline_holder: dict[str, float] = {}
    aux = _sweep._sweep_aux(data.predictions, data.labels, min(chunk_size, total))

    def worker(lo: int, hi: int) -> None:
        counts = _sweep.chunk_counts(data.predictions, data.labels, arr[lo:hi], aux)
        macro = _sweep.scores_from_counts(counts, kind).mean(axis=1)
        local = lo + _select_best(macro, arr[lo:hi])
        chunk_best[lo] = (
            _candidate_key(float(macro[local - lo]), arr[local], center),
            local,
            float(macro[local - lo]),
        )
        if lo <= bary_idx < hi:
            baseline_holder["score"] = float(macro[bary_idx - lo])

    _sweep.map_chunks(total, worker, threads=threads, chunk_size=chunk_size)
    key, best_index, best_score = min(chunk_best.values())
    return TuningReport(
        thresholds=ts,
        score_kind=kind,
        macro_scores=None,
        class_scores=None,
        best_index=best_index,
        best_threshold=SimplexPoint(tuple(arr[best_index])),
        best_score=best_score,
        baseline_argmax_score=baseline_holder["score"],
    )
