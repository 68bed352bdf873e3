import numpy as np
import pytest

from l1tv import (
    Metric,
    Signal,
    backtrack,
    build_grid,
    canonicalize_angle,
    energy,
    solve,
    tabulate,
)
from l1tv.oracle import exhaustive_solve, weighted_median_circular, weighted_median_real
from support import random_circular_instance, random_real_instance


class TestTabulate:
    def test_real_two_sample_tables(self):
        s = Signal([0.0, 1.0], [1.0, 1.0])
        tables = tabulate(s, build_grid(s), 0.5)
        assert np.array_equal(tables, [[0.0, 1.0], [1.0, 0.5]])

    def test_single_sample_is_pure_data_cost(self):
        s = Signal([2.0], [3.0])
        grid = build_grid(Signal([2.0, 0.0, 5.0]))
        tables = tabulate(s, grid, 1.0)
        assert np.array_equal(tables, [[3.0 * 2.0, 0.0, 3.0 * 3.0]])

    def test_circular_antipodal_tables(self):
        s = Signal([0.0, np.pi], [1.0, 1.0], Metric.CIRCULAR)
        tables = tabulate(s, build_grid(s), 2.0)
        expected = np.array([[0.0, np.pi], [np.pi, np.pi]])
        assert tables == pytest.approx(expected, rel=1e-15)

    def test_metric_mismatch_rejected(self):
        s = Signal([0.0, 1.0])
        grid = build_grid(Signal([0.0, 1.0], metric=Metric.CIRCULAR))
        with pytest.raises(ValueError):
            tabulate(s, grid, 1.0)


class TestBacktrack:
    def test_traces_the_real_example(self):
        s = Signal([0.0, 1.0], [1.0, 1.0])
        grid = build_grid(s)
        tables = tabulate(s, grid, 0.5)
        path = backtrack(tables, grid, 0.5, Metric.REAL)
        assert np.array_equal(path, [0, 1])
        assert np.array_equal(grid.values[path], [0.0, 1.0])

    def test_single_row_is_plain_argmin(self):
        grid = build_grid(Signal([0.0, 1.0]))
        path = backtrack(np.array([[3.0, 1.0]]), grid, 1.0, Metric.REAL)
        assert np.array_equal(path, [1])

    def test_ties_break_to_the_smallest_index(self):
        grid = build_grid(Signal([0.0, 1.0, 2.0]))
        tables = np.zeros((4, 3))
        path = backtrack(tables, grid, 1.0, Metric.REAL)
        assert np.array_equal(path, [0, 0, 0, 0])

    def test_bad_shape_rejected(self):
        grid = build_grid(Signal([0.0, 1.0]))
        with pytest.raises(ValueError):
            backtrack(np.zeros((2, 3)), grid, 1.0, Metric.REAL)


class TestSolveExamples:
    def test_small_alpha_keeps_the_jump(self):
        r = solve(Signal([0.0, 1.0], [1.0, 1.0]), 0.5)
        assert np.array_equal(r.minimizer, [0.0, 1.0])
        assert r.energy == pytest.approx(0.5, abs=0.0)

    def test_large_alpha_flattens(self):
        # constants 0 and 1 tie at energy 1; the smaller value wins
        r = solve(Signal([0.0, 1.0], [1.0, 1.0]), 2.0)
        assert np.array_equal(r.minimizer, [0.0, 0.0])
        assert r.energy == pytest.approx(1.0, abs=0.0)

    def test_circular_antipodal_flattens(self):
        r = solve(Signal([0.0, np.pi], [1.0, 1.0], Metric.CIRCULAR), 2.0)
        assert np.array_equal(r.minimizer, [0.0, 0.0])
        assert r.energy == pytest.approx(np.pi, abs=0.0)

    def test_report_fields(self):
        s = Signal([0.0, 1.0, 0.0])
        r = solve(s, 0.3)
        assert r.signal_length == 3
        assert r.grid_size == 2
        assert r.alpha == 0.3
        assert r.elapsed_seconds >= 0.0
        assert r.energy == pytest.approx(energy(s, r.minimizer, 0.3), rel=1e-10)

    def test_zero_alpha_returns_the_data(self):
        y = [0.5, -1.0, 2.0]
        r = solve(Signal(y, [1.0, 0.0, 2.0]), 0.0)
        assert np.array_equal(r.minimizer, y)

    def test_single_sample_returns_the_datum(self):
        r = solve(Signal([4.2], [2.0]), 10.0)
        assert np.array_equal(r.minimizer, [4.2])

    def test_deterministic(self):
        rng = np.random.default_rng(40)
        s = random_real_instance(rng, max_n=6)
        a = solve(s, 0.7)
        b = solve(s, 0.7)
        assert np.array_equal(a.minimizer, b.minimizer)
        assert a.energy == b.energy

    def test_rejects_non_signal(self):
        with pytest.raises(TypeError):
            solve([1.0, 2.0], 1.0)


class TestSolveAgainstFullEnumeration:
    @pytest.mark.parametrize("make,seed", [(random_real_instance, 41), (random_circular_instance, 42)])
    def test_energy_matches_enumeration(self, make, seed):
        rng = np.random.default_rng(seed)
        for _ in range(60):
            s = make(rng)
            alpha = float(rng.choice([0.1, 0.5, 1.0, 3.0]))
            got = solve(s, alpha)
            want = exhaustive_solve(s, build_grid(s), alpha)
            assert got.energy == pytest.approx(want.energy, abs=1e-9)

    def test_minimizer_values_always_on_the_grid(self):
        rng = np.random.default_rng(43)
        for make in (random_real_instance, random_circular_instance):
            for _ in range(40):
                s = make(rng)
                grid = build_grid(s)
                r = solve(s, float(rng.uniform(0.0, 3.0)))
                assert np.all(grid.contains(r.minimizer))


class TestSolveProperties:
    def test_energy_monotone_in_alpha(self):
        rng = np.random.default_rng(44)
        for make in (random_real_instance, random_circular_instance):
            for _ in range(20):
                s = make(rng)
                ladder = np.sort(rng.uniform(0.0, 5.0, 5))
                energies = [solve(s, a).energy for a in ladder]
                assert np.all(np.diff(energies) >= -1e-12)

    def test_translation_leaves_real_energy_unchanged(self):
        rng = np.random.default_rng(45)
        for _ in range(25):
            s = random_real_instance(rng)
            shift = float(rng.uniform(-10, 10))
            moved = Signal(s.values + shift, s.weights, Metric.REAL)
            a = float(rng.uniform(0.1, 3.0))
            assert solve(moved, a).energy == pytest.approx(solve(s, a).energy, abs=1e-10)

    def test_rotation_leaves_circular_energy_unchanged(self):
        rng = np.random.default_rng(46)
        for _ in range(25):
            s = random_circular_instance(rng)
            shift = float(rng.uniform(-10, 10))
            moved = Signal(
                canonicalize_angle(s.values + shift), s.weights, Metric.CIRCULAR
            )
            a = float(rng.uniform(0.1, 3.0))
            assert solve(moved, a).energy == pytest.approx(solve(s, a).energy, abs=1e-10)

    def test_huge_alpha_gives_a_constant_weighted_median_real(self):
        # alphabet gaps >= 1, where alpha > total_weight * range forces a constant
        rng = np.random.default_rng(47)
        for _ in range(25):
            n = int(rng.integers(2, 7))
            y = rng.integers(-3, 4, n).astype(float)
            w = rng.uniform(0.1, 2.0, n)
            s = Signal(y, w)
            diam = float(y.max() - y.min())
            alpha = float(w.sum()) * diam + 1.0
            r = solve(s, alpha)
            assert np.all(r.minimizer == r.minimizer[0])
            mu = weighted_median_real(y, w)
            assert r.energy == pytest.approx(
                float(np.sum(w * np.abs(mu - y))), abs=1e-9
            )

    def test_huge_alpha_gives_a_constant_weighted_median_circular(self):
        rng = np.random.default_rng(48)
        alphabet = np.array([-np.pi / 2, 0.0, np.pi / 2, np.pi])
        for _ in range(25):
            n = int(rng.integers(2, 6))
            y = rng.choice(alphabet, n)
            w = rng.uniform(0.1, 2.0, n)
            s = Signal(y, w, Metric.CIRCULAR)
            alpha = float(w.sum()) * np.pi + 1.0
            r = solve(s, alpha)
            assert np.all(r.minimizer == r.minimizer[0])
            mu = weighted_median_circular(y, w)
            want = float(
                np.sum(w * np.minimum(np.abs(mu - y), 2 * np.pi - np.abs(mu - y)))
            )
            assert r.energy == pytest.approx(want, abs=1e-9)

    def test_energy_never_beats_keeping_the_data(self):
        rng = np.random.default_rng(49)
        for make in (random_real_instance, random_circular_instance):
            for _ in range(25):
                s = make(rng)
                a = float(rng.uniform(0.0, 3.0))
                assert solve(s, a).energy <= energy(s, s.values, a) + 1e-12

    def test_zero_weight_samples_keep_their_chain_position(self):
        s = Signal([0.0, 5.0, 0.0], [1.0, 0.0, 1.0])
        r = solve(s, 0.1)
        assert np.array_equal(r.minimizer, [0.0, 0.0, 0.0])
        assert r.energy == pytest.approx(0.0, abs=0.0)
