"""Brute-force and analytic references, for testing only.

Everything here is written in the most literal way that still runs in
reasonable time, shares nothing with the solver beyond the core
distance/energy definitions, and is meant for tiny instances.
"""

from dataclasses import dataclass

import numpy as np

from .candidates import antipode, unique_values
from .core import TWO_PI, Metric, canonicalize_angle, check_alpha, distance, energy
from .solver import solve

_CHUNK = 1 << 16


@dataclass(frozen=True)
class OracleResult:
    minimizer: np.ndarray
    energy: float
    evaluated_count: int


def _tuple_energies(signal, x_rows, alpha):
    # rows of candidate sequences -> energies, all at once
    jumps = distance(signal.metric, x_rows[:, :-1], x_rows[:, 1:])
    misfit = distance(signal.metric, x_rows, signal.values[None, :])
    return alpha * np.sum(jumps, axis=1) + np.sum(signal.weights[None, :] * misfit, axis=1)


def exhaustive_solve(signal, grid, alpha, max_states=10**7):
    """Enumerate every grid-valued sequence and keep the best.

    Returns the lexicographically first minimizer (index order, which
    is also value order since the grid is ascending) and the number of
    sequences evaluated. Refuses to enumerate more than max_states.
    """
    alpha = check_alpha(alpha)
    n = signal.n
    k = grid.values.size
    total = k**n
    if total > max_states:
        raise ValueError(
            "would enumerate %d states, above the max_states guard %d"
            % (total, max_states)
        )
    shape = (k,) * n
    best_energy = np.inf
    best_row = None
    for start in range(0, total, _CHUNK):
        flat = np.arange(start, min(start + _CHUNK, total))
        idx = np.stack(np.unravel_index(flat, shape), axis=1)
        rows = grid.values[idx]
        energies = _tuple_energies(signal, rows, alpha)
        at = int(np.argmin(energies))
        if energies[at] < best_energy:
            best_energy = float(energies[at])
            best_row = rows[at].copy()
    return OracleResult(
        minimizer=best_row,
        energy=energy(signal, best_row, alpha),
        evaluated_count=total,
    )


def continuous_probe(signal, alpha, resolution, trials=1000, seed=0):
    """Best energy found while probing outside the candidate grid.

    Searches two ways and returns the lowest energy seen: (a) the exact
    minimum over all sequences drawn from a uniform grid of
    `resolution` points per coordinate spanning the data range (real)
    or the whole circle (circular), computed by a literal O(R^2 N)
    Bellman sweep over that uniform grid; (b) `trials` seeded random
    perturbations of the solver's own output at mixed scales. If the
    solver truly is a global minimizer, the returned value can never
    be meaningfully below its energy.
    """
    alpha = check_alpha(alpha)
    if signal.n > 8:
        raise ValueError("probe is meant for tiny instances (N <= 8)")
    if resolution < 10:
        raise ValueError("resolution must be at least 10")
    y = signal.values
    w = signal.weights

    if signal.metric is Metric.REAL:
        points = np.linspace(y.min(), y.max(), resolution)
    else:
        points = canonicalize_angle(
            -np.pi + TWO_PI * (np.arange(resolution) + 1.0) / resolution
        )
        points = np.sort(points)
    moves = alpha * distance(signal.metric, points[:, None], points[None, :])
    partial = w[0] * distance(signal.metric, points, y[0])
    for n in range(1, signal.n):
        partial = w[n] * distance(signal.metric, points, y[n]) + np.min(
            partial[None, :] + moves, axis=1
        )
    best = float(np.min(partial))

    base = solve(signal, alpha).minimizer
    rng = np.random.default_rng(seed)
    if signal.metric is Metric.REAL:
        span = max(float(y.max() - y.min()), 1.0)
    else:
        span = np.pi
    scales = span * 10.0 ** rng.uniform(-6.0, 0.0, trials)
    wiggled = base[None, :] + scales[:, None] * rng.standard_normal((trials, signal.n))
    if signal.metric is Metric.CIRCULAR:
        wiggled = canonicalize_angle(wiggled)
    best = min(best, float(np.min(_tuple_energies(signal, wiggled, alpha))))
    return best


def weighted_median_real(y, w):
    """A data value minimizing the weighted sum of absolute deviations.

    Ties go to the smallest such value.
    """
    y = np.asarray(y, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    if y.shape != w.shape or y.ndim != 1 or y.size < 1:
        raise ValueError("y and w must be equally long 1-D sequences")
    if np.any(w < 0.0) or not np.any(w > 0.0):
        raise ValueError("weights must be >= 0 with at least one positive")
    candidates = unique_values(y)
    objective = np.sum(w[None, :] * np.abs(candidates[:, None] - y[None, :]), axis=1)
    return float(candidates[int(np.argmin(objective))])


def weighted_median_circular(y, w):
    """A canonical angle minimizing the weighted sum of arc distances.

    The minimum is always attained on the data values or their
    antipodes; only those candidates are scanned. Ties go to the
    smallest canonical value.
    """
    y = np.asarray(y, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    if y.shape != w.shape or y.ndim != 1 or y.size < 1:
        raise ValueError("y and w must be equally long 1-D sequences")
    if np.any(w < 0.0) or not np.any(w > 0.0):
        raise ValueError("weights must be >= 0 with at least one positive")
    candidates = np.unique(np.concatenate([y, antipode(y)]))
    arcs = distance(Metric.CIRCULAR, candidates[:, None], y[None, :])
    objective = np.sum(w[None, :] * arcs, axis=1)
    return float(candidates[int(np.argmin(objective))])
