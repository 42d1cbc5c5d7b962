"""Threshold tuning and ROC-cloud analysis for multiclass classifiers.

Softmax outputs are treated as points on the probability simplex and
classified by comparing them against a multidimensional threshold. The
package searches threshold candidates exhaustively for the best macro
score, and analyses classifier behavior through the per-class operating
points that a single shared threshold induces.
"""

from .errors import (
    DegenerateClassError,
    DimensionMismatchError,
    DimensionTooSmallError,
    EmptyCloudError,
    EmptyThresholdSetError,
    GridOverflowError,
    LabelOutOfRangeError,
    MalformedHeaderError,
    NegativeComponentError,
    RowValidationError,
    SimplexTuneError,
    SumNotOneError,
    ValidationError,
)
from .metrics import (
    ClassConfusion,
    LabeledPredictions,
    ScoreKind,
    confusion_matrices,
    macro_score,
    score,
    score_vector,
)
from .roc import DfpSummary, OvrCurve, RocCloud, dfp, ovr_curve, ovr_curves, roc_cloud
from .rules import (
    ClassAssignment,
    OvrAssignment,
    assign_ovr,
    classify_argmax,
    classify_natural,
)
from .simplex import (
    SimplexPoint,
    ThresholdSet,
    barycenter,
    dirichlet_sample,
    grid,
    grid_size,
    make_point,
)
from .synth import SynthSpec, generate
from .tuning import TuningEntry, TuningReport, tune

__version__ = "0.1.0"

__all__ = [
    "SimplexPoint",
    "ThresholdSet",
    "make_point",
    "barycenter",
    "grid",
    "grid_size",
    "dirichlet_sample",
    "ClassAssignment",
    "OvrAssignment",
    "classify_natural",
    "classify_argmax",
    "assign_ovr",
    "LabeledPredictions",
    "ClassConfusion",
    "ScoreKind",
    "confusion_matrices",
    "score",
    "score_vector",
    "macro_score",
    "TuningReport",
    "TuningEntry",
    "tune",
    "RocCloud",
    "DfpSummary",
    "OvrCurve",
    "roc_cloud",
    "dfp",
    "ovr_curve",
    "ovr_curves",
    "SynthSpec",
    "generate",
    "SimplexTuneError",
    "ValidationError",
    "NegativeComponentError",
    "SumNotOneError",
    "DimensionTooSmallError",
    "DimensionMismatchError",
    "GridOverflowError",
    "EmptyThresholdSetError",
    "EmptyCloudError",
    "DegenerateClassError",
    "MalformedHeaderError",
    "RowValidationError",
    "LabelOutOfRangeError",
]
