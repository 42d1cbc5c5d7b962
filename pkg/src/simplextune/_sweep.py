"""Vectorized confusion-count sweep over many thresholds.

The kernel classifies every sample under every threshold in a chunk at
once (argmax of prediction minus threshold, first index on ties) and
reduces to per-class TN/FP/FN/TP via one contingency table per threshold.
Chunks are independent and written into disjoint slices of preallocated
output, so results are identical for any worker count. Worker threads get
real parallelism because the heavy numpy ops release the GIL.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np

from .errors import ValidationError

DEFAULT_CHUNK = 128

# Index layout of the trailing axis of a counts array.
TN, FP, FN, TP = 0, 1, 2, 3


def resolve_threads(threads: int | None) -> int:
    if threads is None:
        return max(1, os.cpu_count() or 1)
    if threads < 1:
        raise ValidationError(f"threads must be >= 1, got {threads}")
    return threads


def _sweep_aux(
    predictions: np.ndarray, labels: np.ndarray, max_b: int
) -> tuple[list[np.ndarray], np.ndarray]:
    """Shared read-only scratch: contiguous per-class prediction columns and
    the label-plus-chunk-row offsets used to index the contingency tables."""
    m = predictions.shape[1]
    cols = [np.ascontiguousarray(predictions[:, j]) for j in range(m)]
    off = (np.arange(max_b, dtype=np.int64) * (m * m))[:, None] + labels[None, :]
    return cols, off


def chunk_counts(
    predictions: np.ndarray,
    labels: np.ndarray,
    taus: np.ndarray,
    aux: tuple[list[np.ndarray], np.ndarray] | None = None,
) -> np.ndarray:
    """Confusion counts (B, m, 4) for one chunk of B thresholds."""
    b, m = taus.shape
    n = predictions.shape[0]
    if aux is None:
        aux = _sweep_aux(predictions, labels, b)
    cols, off = aux
    # argmax_j (z_j - tau_j) as a running scan over classes; a strictly
    # greater value is required to replace, so ties keep the smallest index.
    best = cols[0][None, :] - taus[:, 0][:, None]  # (B, n)
    assigned = np.zeros((b, n), dtype=np.int64)
    for j in range(1, m):
        cur = cols[j][None, :] - taus[:, j][:, None]
        better = cur > best
        np.copyto(best, cur, where=better)
        np.copyto(assigned, j, where=better)
    codes = assigned * m
    codes += off[:b]
    table = np.bincount(codes.ravel(), minlength=b * m * m).reshape(b, m, m)
    # table[b, p, t]: samples of true class t assigned to class p
    tp = np.diagonal(table, axis1=1, axis2=2)
    fp = table.sum(axis=2) - tp  # assigned to j, true class differs
    fn = table.sum(axis=1) - tp  # true class j, assigned elsewhere
    tn = n - tp - fp - fn
    return np.stack([tn, fp, fn, tp], axis=2)


def _chunk_ranges(total: int, chunk_size: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + chunk_size, total)) for lo in range(0, total, chunk_size)]


def map_chunks(
    total: int,
    worker: Callable[[int, int], None],
    *,
    threads: int | None = None,
    chunk_size: int = DEFAULT_CHUNK,
) -> None:
    """Run ``worker(lo, hi)`` over fixed-size ranges covering ``total``.

    Chunk boundaries do not depend on the worker count, and each call owns
    its output slice, so the filled arrays are bit-identical for any
    ``threads`` value.
    """
    ranges = _chunk_ranges(total, chunk_size)
    nworkers = resolve_threads(threads)
    if nworkers == 1 or len(ranges) == 1:
        for lo, hi in ranges:
            worker(lo, hi)
        return
    with ThreadPoolExecutor(max_workers=nworkers) as pool:
        list(pool.map(lambda r: worker(*r), ranges))


def sweep_counts(
    predictions: np.ndarray,
    labels: np.ndarray,
    taus: np.ndarray,
    *,
    threads: int | None = None,
    chunk_size: int = DEFAULT_CHUNK,
) -> np.ndarray:
    """Confusion counts (M, m, 4) for every threshold row of ``taus``."""
    m = taus.shape[1]
    out = np.empty((taus.shape[0], m, 4), dtype=np.int64)
    aux = _sweep_aux(predictions, labels, min(chunk_size, len(taus)))

    def worker(lo: int, hi: int) -> None:
        out[lo:hi] = chunk_counts(predictions, labels, taus[lo:hi], aux)

    map_chunks(len(taus), worker, threads=threads, chunk_size=chunk_size)
    return out


def _ratio(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    """Elementwise num/den with 0 where den == 0."""
    out = np.zeros(num.shape, dtype=np.float64)
    np.divide(num, den, out=out, where=den > 0)
    return out


def scores_from_counts(counts: np.ndarray, kind) -> np.ndarray:
    """Per-class scores (..., m) from a counts array (..., m, 4).

    ``kind`` is a ScoreKind; imported lazily to avoid a module cycle.
    """
    from .metrics import ScoreKind

    tn = counts[..., TN]
    fp = counts[..., FP]
    fn = counts[..., FN]
    tp = counts[..., TP]
    if kind is ScoreKind.ACCURACY:
        return _ratio(tp + tn, tn + fp + fn + tp)
    if kind is ScoreKind.PRECISION:
        return _ratio(tp, tp + fp)
    if kind is ScoreKind.RECALL:
        return _ratio(tp, tp + fn)
    if kind is ScoreKind.FPR:
        return _ratio(fp, fp + tn)
    if kind is ScoreKind.TNR:
        return 1.0 - _ratio(fp, fp + tn)
    if kind is ScoreKind.F1:
        return _ratio(2 * tp, 2 * tp + fp + fn)
    raise ValueError(f"unknown score kind {kind!r}")


def rates_from_counts(counts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(fpr, tpr) arrays of shape (..., m) from a counts array."""
    fpr = _ratio(counts[..., FP], counts[..., FP] + counts[..., TN])
    tpr = _ratio(counts[..., TP], counts[..., TP] + counts[..., FN])
    return fpr, tpr
