"""Exception hierarchy shared across the package."""

from __future__ import annotations


class SimplexTuneError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SimplexTuneError, ValueError):
    """Invalid input data or parameters."""


class NegativeComponentError(ValidationError):
    """A simplex coordinate is negative."""


class SumNotOneError(ValidationError):
    """Simplex coordinates do not sum to one within tolerance."""


class DimensionTooSmallError(ValidationError):
    """Fewer than two classes."""


class DimensionMismatchError(ValidationError):
    """Operands have different numbers of classes."""


class GridOverflowError(SimplexTuneError):
    """Requested grid exceeds the configured size cap."""


class EmptyThresholdSetError(ValidationError):
    """A threshold set must contain at least one point."""


class EmptyCloudError(ValidationError):
    """An operating-point cloud must contain at least one point."""


class DegenerateClassError(SimplexTuneError):
    """A class has no positive or no negative samples, so a ranking
    curve (and its area) is undefined for it."""

    def __init__(self, class_index: int, detail: str) -> None:
        super().__init__(f"class {class_index}: {detail}")
        self.class_index = class_index


class MalformedHeaderError(ValidationError):
    """CSV header does not match the expected schema."""


class RowValidationError(ValidationError):
    """A CSV data row failed validation.

    ``row`` is the 1-based line number in the file (the header is line 1).
    """

    def __init__(self, row: int, cause: str) -> None:
        super().__init__(f"row {row}: {cause}")
        self.row = row
        self.cause = cause


class LabelOutOfRangeError(RowValidationError):
    """A label index is outside {0..m-1}."""


class UsageError(SimplexTuneError):
    """Bad command-line invocation."""
