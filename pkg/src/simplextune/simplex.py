"""Points on the probability simplex and threshold candidate sets.

A point lives on the (m-1)-simplex: m nonnegative coordinates summing to
one. The same type serves both as a classifier output and as a decision
threshold. Candidate threshold sets come from a uniform grid (all integer
compositions of the resolution, scaled) or from uniform random sampling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DimensionTooSmallError,
    EmptyThresholdSetError,
    GridOverflowError,
    NegativeComponentError,
    SumNotOneError,
    ValidationError,
)

#: Default tolerance on |sum(components) - 1|, loose enough for float32
#: softmax dumps.
SUM_TOLERANCE = 1e-6

#: L1 radius within which a point counts as "the barycenter is present".
BARYCENTER_ATOL = 1e-12

DEFAULT_GRID_CAP = 10**8


def _validate_components(components: tuple[float, ...], sum_tol: float) -> None:
    if len(components) < 2:
        raise DimensionTooSmallError(
            f"need at least 2 components, got {len(components)}"
        )
    for i, c in enumerate(components):
        if not (c >= 0.0):
            raise NegativeComponentError(f"component {i} is {c!r}")
    total = math.fsum(components)
    if abs(total - 1.0) > sum_tol:
        raise SumNotOneError(f"components sum to {total!r}, not 1")


@dataclass(frozen=True)
class SimplexPoint:
    """An immutable point on the probability simplex.

    Coordinates are validated on construction: nonnegative, summing to one
    within :data:`SUM_TOLERANCE`, at least two of them.
    """

    components: tuple[float, ...]

    def __post_init__(self) -> None:
        coerced = tuple(float(c) for c in self.components)
        object.__setattr__(self, "components", coerced)
        _validate_components(coerced, SUM_TOLERANCE)

    @property
    def dimension(self) -> int:
        return len(self.components)

    def as_array(self) -> np.ndarray:
        return np.array(self.components, dtype=np.float64)

    def __iter__(self) -> Iterator[float]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)


def make_point(components: Sequence[float]) -> SimplexPoint:
    """Validate and wrap raw coordinates as a :class:`SimplexPoint`."""
    return SimplexPoint(tuple(float(c) for c in components))


def barycenter(m: int) -> SimplexPoint:
    """The point (1/m, ..., 1/m), where the thresholded rule reduces to argmax."""
    if m < 2:
        raise DimensionTooSmallError(f"need at least 2 classes, got {m}")
    return SimplexPoint((1.0 / m,) * m)


class ThresholdSet:
    """An ordered, immutable collection of candidate thresholds.

    Points are stored as a read-only (M, m) float64 array; iteration yields
    :class:`SimplexPoint` views. Order is deterministic for a fixed
    provenance, which the tuning and ROC sweeps rely on.
    """

    def __init__(
        self,
        points: np.ndarray | Sequence[SimplexPoint] | Sequence[Sequence[float]],
        provenance: str = "explicit",
        *,
        seed: int | None = None,
        sum_tol: float = SUM_TOLERANCE,
    ) -> None:
        if isinstance(points, np.ndarray):
            arr = np.array(points, dtype=np.float64)
        else:
            rows = [
                p.components if isinstance(p, SimplexPoint) else tuple(p)
                for p in points
            ]
            arr = np.array(rows, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] == 0:
            raise EmptyThresholdSetError("threshold set must be a non-empty 2-D table")
        if arr.shape[1] < 2:
            raise DimensionTooSmallError(
                f"thresholds need at least 2 components, got {arr.shape[1]}"
            )
        if np.any(arr < 0.0) or not np.all(np.isfinite(arr)):
            bad = int(np.argwhere((arr < 0.0) | ~np.isfinite(arr))[0][0])
            raise NegativeComponentError(f"threshold {bad} has a negative component")
        sums = arr.sum(axis=1)
        off = np.abs(sums - 1.0)
        if np.any(off > sum_tol):
            bad = int(np.argmax(off))
            raise SumNotOneError(f"threshold {bad} sums to {sums[bad]!r}, not 1")
        arr.setflags(write=False)
        self._array = arr
        self.provenance = provenance
        self.seed = seed

    @property
    def array(self) -> np.ndarray:
        """Read-only (M, m) view of all thresholds."""
        return self._array

    @property
    def m(self) -> int:
        return self._array.shape[1]

    def __len__(self) -> int:
        return self._array.shape[0]

    def __getitem__(self, index: int) -> SimplexPoint:
        return SimplexPoint(tuple(self._array[index]))

    def __iter__(self) -> Iterator[SimplexPoint]:
        for row in self._array:
            yield SimplexPoint(tuple(row))

    def barycenter_index(self) -> int | None:
        """Index of the barycenter entry, or None if the set lacks one.

        A point counts if its L1 distance from (1/m, ..., 1/m) is at most
        :data:`BARYCENTER_ATOL`.
        """
        center = np.full(self.m, 1.0 / self.m)
        dists = np.abs(self._array - center).sum(axis=1)
        idx = int(np.argmin(dists))
        return idx if dists[idx] <= BARYCENTER_ATOL else None

    def with_barycenter(self) -> "ThresholdSet":
        """This set if it already holds the barycenter, else a copy with the
        exact barycenter appended as the last entry.

        Tuning always evaluates through this view, so the plain-argmax
        threshold is a candidate even for grids that cannot represent it.
        """
        if self.barycenter_index() is not None:
            return self
        appended = np.vstack([self._array, barycenter(self.m).as_array()])
        return ThresholdSet(appended, self.provenance, seed=self.seed)


def grid_size(m: int, k: int) -> int:
    """Number of grid points at resolution ``k``: C(k+m-1, m-1)."""
    if m < 2:
        raise DimensionTooSmallError(f"need at least 2 classes, got {m}")
    if k < 1:
        raise ValidationError(f"resolution must be >= 1, got {k}")
    return math.comb(k + m - 1, m - 1)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All weak compositions of ``total`` into ``parts`` nonnegative integers,
    in ascending lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head, *tail)


def grid(m: int, k: int, *, max_points: int = DEFAULT_GRID_CAP) -> ThresholdSet:
    """Uniform simplex grid: every point whose coordinates are integer
    multiples of 1/k and sum to one.

    Coordinates are computed as c_i / k from the integer compositions, so a
    given (m, k) grid is reproducible bit for bit. Points appear in
    ascending lexicographic order of their compositions. The grid holds
    exactly C(k+m-1, m-1) points; the barycenter is among them iff m
    divides k.

    Args:
        m: number of classes (>= 2).
        k: resolution, the number of steps per axis (>= 1).
        max_points: raise :class:`GridOverflowError` beyond this cardinality.
    """
    count = grid_size(m, k)
    if count > max_points:
        raise GridOverflowError(
            f"grid(m={m}, k={k}) would have {count} points, cap is {max_points}"
        )
    comps = np.empty((count, m), dtype=np.int64)
    for i, c in enumerate(_compositions(k, m)):
        comps[i] = c
    arr = comps.astype(np.float64) / k
    return ThresholdSet(arr, provenance=f"grid(k={k})")


def dirichlet_sample(m: int, count: int, seed: int) -> ThresholdSet:
    """Uniform random thresholds: ``count`` draws from the flat Dirichlet
    (normalized unit-exponential coordinates), plus the barycenter appended
    as the final entry.

    A pure function of (m, count, seed).
    """
    if m < 2:
        raise DimensionTooSmallError(f"need at least 2 classes, got {m}")
    if count < 1:
        raise ValidationError(f"count must be >= 1, got {count}")
    rng = np.random.default_rng(seed)
    draws = rng.standard_exponential((count, m))
    draws /= draws.sum(axis=1, keepdims=True)
    arr = np.vstack([draws, barycenter(m).as_array()])
    return ThresholdSet(
        arr, provenance=f"dirichlet(count={count}, seed={seed})", seed=seed
    )
