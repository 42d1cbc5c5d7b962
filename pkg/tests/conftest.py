import numpy as np
import pytest

from simplextune import LabeledPredictions

HAND_PREDICTIONS = [
    (0.6, 0.3, 0.1),
    (0.2, 0.5, 0.3),
    (0.1, 0.8, 0.1),
    (0.2, 0.2, 0.6),
    (0.4, 0.3, 0.3),
]
HAND_LABELS = [0, 0, 1, 2, 2]


@pytest.fixture
def hand_data() -> LabeledPredictions:
    """Five samples over three classes, small enough to verify by hand."""
    return LabeledPredictions(HAND_PREDICTIONS, HAND_LABELS)


def random_dataset(rng: np.random.Generator, n: int, m: int) -> LabeledPredictions:
    """A quick random dataset: flat-Dirichlet predictions, uniform labels."""
    preds = rng.dirichlet(np.ones(m), size=n)
    labels = rng.integers(0, m, size=n)
    return LabeledPredictions(preds, labels)
