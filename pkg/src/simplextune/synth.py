"""Synthetic labeled predictions with controllable difficulty.

Labels follow the requested priors. Each sample then aims at a vertex of
the simplex (its own class under the identity setup, or a vertex drawn
from the confusion matrix row for its class) and its prediction is a
Dirichlet draw concentrated on that vertex. Larger ``concentration`` makes
predictions sharper and the classification easier.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from .errors import ValidationError
from .metrics import LabeledPredictions
from .simplex import SimplexPoint, make_point


@dataclass(frozen=True)
class SynthSpec:
    """Parameters of the generator; a given spec always yields the same data."""

    m: int
    n: int
    priors: SimplexPoint
    concentration: float
    seed: int
    confusion_bias: tuple[tuple[float, ...], ...] | None = None

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValidationError(f"m must be >= 2, got {self.m}")
        if self.n < 1:
            raise ValidationError(f"n must be >= 1, got {self.n}")
        if self.priors.dimension != self.m:
            raise ValidationError(
                f"priors have {self.priors.dimension} components, expected {self.m}"
            )
        if not (self.concentration > 0):
            raise ValidationError(
                f"concentration must be positive, got {self.concentration}"
            )
        if self.confusion_bias is not None:
            rows = tuple(tuple(float(x) for x in row) for row in self.confusion_bias)
            object.__setattr__(self, "confusion_bias", rows)
            if len(rows) != self.m or any(len(r) != self.m for r in rows):
                raise ValidationError("confusion_bias must be an m-by-m table")
            for i, row in enumerate(rows):
                if any(x < 0 for x in row):
                    raise ValidationError(f"confusion_bias row {i} has a negative entry")
                if abs(sum(row) - 1.0) > 1e-6:
                    raise ValidationError(f"confusion_bias row {i} does not sum to 1")

    @classmethod
    def from_dict(cls, raw: Mapping[str, Any]) -> "SynthSpec":
        try:
            bias = raw.get("confusion_bias")
            return cls(
                m=int(raw["m"]),
                n=int(raw["n"]),
                priors=make_point(raw["priors"]),
                concentration=float(raw["concentration"]),
                seed=int(raw["seed"]),
                confusion_bias=None if bias is None else tuple(map(tuple, bias)),
            )
        except KeyError as exc:
            raise ValidationError(f"synth config missing key {exc.args[0]!r}") from None

    @classmethod
    def from_json(cls, path: str | Path) -> "SynthSpec":
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        if not isinstance(raw, dict):
            raise ValidationError("synth config must be a JSON object")
        return cls.from_dict(raw)


def generate(spec: SynthSpec) -> LabeledPredictions:
    """Draw a dataset from ``spec``. Pure function of the spec."""
    rng = np.random.default_rng(spec.seed)
    priors = spec.priors.as_array()
    labels = rng.choice(spec.m, size=spec.n, p=priors)

    if spec.confusion_bias is None:
        targets = labels
    else:
        bias = np.array(spec.confusion_bias, dtype=np.float64)
        cdf = np.cumsum(bias, axis=1)
        u = rng.random(spec.n)
        targets = (u[:, None] >= cdf[labels]).sum(axis=1)
        np.clip(targets, 0, spec.m - 1, out=targets)

    alphas = np.ones((spec.n, spec.m), dtype=np.float64)
    alphas[np.arange(spec.n), targets] += spec.concentration
    draws = rng.standard_gamma(alphas)
    draws /= draws.sum(axis=1, keepdims=True)
    return LabeledPredictions(draws, labels)
