import numpy as np
import pytest

from l1tv import (
    CandidateGrid,
    Metric,
    Signal,
    antipode,
    build_grid,
    canonicalize_angle,
    unique_values,
)


class TestUniqueValues:
    def test_removes_duplicates(self):
        assert np.array_equal(unique_values([1.0, 2.0, 1.0]), [1.0, 2.0])

    def test_singleton(self):
        assert np.array_equal(unique_values([5.0]), [5.0])

    def test_sorted_distinct(self):
        assert np.array_equal(unique_values([0.5, -0.5, 0.5, 3.0]), [-0.5, 0.5, 3.0])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            unique_values([])


class TestAntipode:
    def test_half_turns(self):
        assert antipode(0.0) == np.pi
        assert antipode(np.pi) == 0.0
        assert antipode(np.pi / 2) == -np.pi / 2

    def test_output_canonical(self):
        rng = np.random.default_rng(21)
        theta = canonicalize_angle(rng.uniform(-np.pi, np.pi, 20_000))
        out = antipode(theta)
        assert np.all(out > -np.pi) and np.all(out <= np.pi)

    def test_involution_exact_on_outer_half(self):
        rng = np.random.default_rng(22)
        theta = np.concatenate([rng.uniform(np.pi / 2, np.pi, 5000),
                                rng.uniform(-np.pi, -np.pi / 2, 5000)])
        theta = theta[np.abs(theta) >= np.pi / 2]
        assert np.array_equal(antipode(antipode(theta)), theta)

    def test_involution_within_rounding_everywhere(self):
        rng = np.random.default_rng(23)
        theta = canonicalize_angle(rng.uniform(-np.pi, np.pi, 20_000))
        assert np.max(np.abs(antipode(antipode(theta)) - theta)) < 1e-15


class TestBuildGrid:
    def test_real_sorted_unique(self):
        grid = build_grid(Signal([0.0, 1.0, 0.0]))
        assert np.array_equal(grid.values, [0.0, 1.0])
        assert grid.k == 2

    def test_circular_adds_antipode(self):
        grid = build_grid(Signal([0.0], metric=Metric.CIRCULAR))
        assert np.array_equal(grid.values, [0.0, np.pi])

    def test_circular_antipodal_data_collapses(self):
        # 2 data values + 2 antipodes deduplicate to K = 2
        grid = build_grid(Signal([0.0, np.pi], metric=Metric.CIRCULAR))
        assert np.array_equal(grid.values, [0.0, np.pi])

    def test_size_bounds(self):
        rng = np.random.default_rng(24)
        for _ in range(100):
            n = int(rng.integers(1, 30))
            y = rng.uniform(-np.pi, np.pi, n)
            real = build_grid(Signal(y))
            assert 1 <= real.k <= n
            circ = build_grid(Signal(y, metric=Metric.CIRCULAR))
            assert 1 <= circ.k <= 2 * n

    def test_closed_under_antipode_within_rounding(self):
        rng = np.random.default_rng(25)
        for _ in range(50):
            y = rng.uniform(-np.pi, np.pi, int(rng.integers(1, 20)))
            grid = build_grid(Signal(y, metric=Metric.CIRCULAR))
            flipped = antipode(grid.values)
            nearest = np.min(
                np.abs(flipped[:, None] - grid.values[None, :]), axis=1
            )
            assert np.max(nearest) < 1e-15

    def test_permutation_invariance(self):
        rng = np.random.default_rng(26)
        y = rng.choice(rng.uniform(-np.pi, np.pi, 5), 40)
        for metric in Metric:
            a = build_grid(Signal(y, metric=metric))
            b = build_grid(Signal(rng.permutation(y), metric=metric))
            assert np.array_equal(a.values, b.values)

    def test_strictly_ascending(self):
        rng = np.random.default_rng(27)
        for metric in Metric:
            y = rng.choice(rng.uniform(-3, 3, 6), 50)
            if metric is Metric.CIRCULAR:
                y = canonicalize_angle(y)
            grid = build_grid(Signal(y, metric=metric))
            assert np.all(np.diff(grid.values) > 0)


class TestCandidateGrid:
    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            CandidateGrid([1.0, 1.0], Metric.REAL)
        with pytest.raises(ValueError):
            CandidateGrid([2.0, 1.0], Metric.REAL)

    def test_rejects_non_canonical_circular(self):
        with pytest.raises(ValueError):
            CandidateGrid([-4.0, 0.0], Metric.CIRCULAR)
        with pytest.raises(ValueError):
            CandidateGrid([0.0, 4.0], Metric.CIRCULAR)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            CandidateGrid([], Metric.REAL)

    def test_contains(self):
        grid = CandidateGrid([0.0, 1.0, 2.5], Metric.REAL)
        assert np.array_equal(grid.contains([0.0, 2.5, 3.0]), [True, True, False])
        assert len(grid) == 3
