"""Decision rules that map a simplex point to one class (or several).

The thresholded rule assigns z to the class j maximizing z_j - tau_j,
which is the same as requiring z_j - z_k > tau_j - tau_k against every
other class. At the barycenter threshold it degenerates to plain argmax.
The one-vs-rest rule (z_j > tau_j per class) is kept for comparison; it
can assign zero or several classes to the same point.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionMismatchError
from .simplex import SimplexPoint


@dataclass(frozen=True)
class ClassAssignment:
    """Outcome of a single-class rule.

    ``tie`` is set when several classes attained the maximum and the
    smallest index was chosen deterministically.
    """

    class_index: int
    tie: bool = False


@dataclass(frozen=True)
class OvrAssignment:
    """Outcome of the one-vs-rest rule: possibly empty, possibly several."""

    classes: frozenset[int] = field(default_factory=frozenset)


def _check_dims(z: SimplexPoint, tau: SimplexPoint) -> None:
    if z.dimension != tau.dimension:
        raise DimensionMismatchError(
            f"point has {z.dimension} components, threshold has {tau.dimension}"
        )


def classify_natural(z: SimplexPoint, tau: SimplexPoint) -> ClassAssignment:
    """Assign z to the class with the largest offset coordinate z_j - tau_j.

    Exact float comparisons; on ties of the maximum the smallest index wins
    and the assignment is flagged.
    """
    _check_dims(z, tau)
    zc = z.components
    tc = tau.components
    best = 0
    best_diff = zc[0] - tc[0]
    tie = False
    for j in range(1, len(zc)):
        d = zc[j] - tc[j]
        if d > best_diff:
            best = j
            best_diff = d
            tie = False
        elif d == best_diff:
            tie = True
    return ClassAssignment(best, tie)


def classify_argmax(z: SimplexPoint) -> ClassAssignment:
    """Plain argmax over the raw coordinates, ties resolved as in
    :func:`classify_natural`. Coincides with the thresholded rule at the
    barycenter."""
    zc = z.components
    best = 0
    best_val = zc[0]
    tie = False
    for j in range(1, len(zc)):
        if zc[j] > best_val:
            best = j
            best_val = zc[j]
            tie = False
        elif zc[j] == best_val:
            tie = True
    return ClassAssignment(best, tie)


def assign_ovr(z: SimplexPoint, tau: SimplexPoint) -> OvrAssignment:
    """Independent per-class thresholding: every j with z_j strictly above
    tau_j. The result is not a partition; it may be empty or contain
    several classes."""
    _check_dims(z, tau)
    members = frozenset(
        j for j, (zj, tj) in enumerate(zip(z.components, tau.components)) if zj > tj
    )
    return OvrAssignment(members)


__all__ = [
    "ClassAssignment",
    "OvrAssignment",
    "classify_natural",
    "classify_argmax",
    "assign_ovr",
]
