import itertools
import math
import time

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplextune import (
    DimensionTooSmallError,
    GridOverflowError,
    NegativeComponentError,
    SumNotOneError,
    ThresholdSet,
    barycenter,
    dirichlet_sample,
    grid,
    grid_size,
    make_point,
)
from simplextune.errors import EmptyThresholdSetError, ValidationError


class TestMakePoint:
    def test_barycenter_valid(self):
        p = make_point((1 / 3, 1 / 3, 1 / 3))
        assert p.components == (1 / 3, 1 / 3, 1 / 3)

    def test_boundary_point_valid(self):
        # boundary coordinates (exact zeros) are allowed
        p = make_point((0.00, 0.06, 0.94))
        assert p.components == (0.0, 0.06, 0.94)

    def test_components_preserved_exactly(self):
        values = (0.12345678901234567, 0.5, 0.37654321098765433)
        assert make_point(values).components == values

    def test_negative_component(self):
        with pytest.raises(NegativeComponentError):
            make_point((0.5, 0.6, -0.1))

    def test_sum_not_one(self):
        with pytest.raises(SumNotOneError):
            make_point((0.5, 0.4))

    def test_dimension_too_small(self):
        with pytest.raises(DimensionTooSmallError):
            make_point((1.0,))

    def test_sum_within_tolerance_accepted(self):
        make_point((0.5 + 4e-7, 0.5))  # inside the 1e-6 budget

    def test_iter_and_len(self):
        p = make_point((0.25, 0.75))
        assert list(p) == [0.25, 0.75]
        assert len(p) == 2
        assert p.dimension == 2


class TestGrid:
    def test_m3_k200_cardinality(self):
        start = time.perf_counter()
        g = grid(3, 200)
        elapsed = time.perf_counter() - start
        assert len(g) == 20301
        assert elapsed < 1.0

    def test_m2_k4_enumeration(self):
        pts = [p.components for p in grid(2, 4)]
        assert pts == [
            (0.0, 1.0),
            (0.25, 0.75),
            (0.5, 0.5),
            (0.75, 0.25),
            (1.0, 0.0),
        ]

    def test_m3_k4_matches_brute_force(self):
        # oracle: enumerate every weak composition of 4 into 3 parts directly
        brute = sorted(
            (a, b, 4 - a - b)
            for a, b in itertools.product(range(5), range(5))
            if a + b <= 4
        )
        g = grid(3, 4)
        assert len(g) == len(brute) == 15
        got = [tuple(round(c * 4) for c in p.components) for p in g]
        assert got == brute  # ascending lexicographic order

    @pytest.mark.parametrize("m,k", [(2, 1), (2, 7), (3, 5), (4, 6), (5, 3)])
    def test_cardinality_formula_and_uniqueness(self, m, k):
        g = grid(m, k)
        assert len(g) == math.comb(k + m - 1, m - 1) == grid_size(m, k)
        rows = {tuple(row) for row in g.array}
        assert len(rows) == len(g)

    def test_coordinates_are_exact_composition_ratios(self):
        g = grid(3, 7)
        for p in g:
            for c in p.components:
                assert c == round(c * 7) / 7

    def test_barycenter_presence(self):
        assert grid(3, 6).barycenter_index() is not None  # 3 | 6
        assert grid(3, 200).barycenter_index() is None  # 3 does not divide 200
        assert grid(4, 8).barycenter_index() is not None

    def test_with_barycenter_appends_when_missing(self):
        g = grid(3, 200)
        gb = g.with_barycenter()
        assert len(gb) == len(g) + 1
        assert gb.barycenter_index() == len(g)
        assert tuple(gb.array[-1]) == barycenter(3).components
        # already present: same object back
        g6 = grid(3, 6)
        assert g6.with_barycenter() is g6

    def test_overflow_cap(self):
        with pytest.raises(GridOverflowError):
            grid(3, 200, max_points=1000)

    def test_parameter_validation(self):
        with pytest.raises(DimensionTooSmallError):
            grid(1, 5)
        with pytest.raises(ValidationError):
            grid(3, 0)


class TestDirichletSample:
    def test_deterministic_for_seed(self):
        a = dirichlet_sample(3, 10, seed=42)
        b = dirichlet_sample(3, 10, seed=42)
        assert np.array_equal(a.array, b.array)
        assert a.provenance == b.provenance

    def test_different_seed_differs(self):
        a = dirichlet_sample(3, 10, seed=42)
        b = dirichlet_sample(3, 10, seed=43)
        assert not np.array_equal(a.array, b.array)

    def test_all_points_valid(self):
        ts = dirichlet_sample(4, 1000, seed=7)
        assert len(ts) == 1001  # barycenter appended
        arr = ts.array
        assert np.all(arr >= 0.0)
        assert np.max(np.abs(arr.sum(axis=1) - 1.0)) <= 1e-6

    def test_barycenter_appended_last(self):
        ts = dirichlet_sample(3, 5, seed=1)
        assert ts.barycenter_index() == 5

    def test_mean_matches_uniform_simplex_mean(self):
        # oracle: mean of the first coordinate over the uniform 2-simplex by
        # midpoint quadrature of x over {x + y <= 1}, normalized by the area
        steps = 400
        h = 1.0 / steps
        moment = area = 0.0
        for i in range(steps):
            x = (i + 0.5) * h
            width = max(0.0, 1.0 - x)
            moment += x * width * h
            area += width * h
        expected = moment / area
        assert abs(expected - 1 / 3) < 1e-3

        ts = dirichlet_sample(3, 10000, seed=1)
        means = ts.array[:-1].mean(axis=0)  # exclude the appended barycenter
        assert np.all(np.abs(means - expected) < 0.02)

    def test_parameter_validation(self):
        with pytest.raises(ValidationError):
            dirichlet_sample(3, 0, seed=1)
        with pytest.raises(DimensionTooSmallError):
            dirichlet_sample(1, 5, seed=1)


class TestThresholdSet:
    def test_explicit_construction_and_iteration(self):
        ts = ThresholdSet([make_point((0.5, 0.5)), make_point((0.25, 0.75))])
        assert len(ts) == 2
        assert ts[1].components == (0.25, 0.75)
        assert [p.components for p in ts] == [(0.5, 0.5), (0.25, 0.75)]
        assert ts.provenance == "explicit"

    def test_rejects_empty(self):
        with pytest.raises(EmptyThresholdSetError):
            ThresholdSet(np.empty((0, 3)))

    def test_rejects_invalid_rows(self):
        with pytest.raises(NegativeComponentError):
            ThresholdSet(np.array([[0.5, 0.6, -0.1]]))
        with pytest.raises(SumNotOneError):
            ThresholdSet(np.array([[0.5, 0.4, 0.2]]))

    def test_array_read_only(self):
        ts = grid(3, 4)
        with pytest.raises(ValueError):
            ts.array[0, 0] = 0.5


@settings(max_examples=40)
@given(m=st.integers(2, 5), k=st.integers(1, 8))
def test_grid_points_always_valid(m, k):
    arr = grid(m, k).array
    assert np.all(arr >= 0.0)
    assert np.max(np.abs(arr.sum(axis=1) - 1.0)) <= 1e-6


@settings(max_examples=20)
@given(m=st.integers(2, 5), count=st.integers(1, 50), seed=st.integers(0, 2**31))
def test_dirichlet_pure_function_of_inputs(m, count, seed):
    a = dirichlet_sample(m, count, seed)
    b = dirichlet_sample(m, count, seed)
    assert np.array_equal(a.array, b.array)
    assert len(a) == count + 1
