"""Exact global minimization of the L1-TV objective.

The search space collapses to a finite candidate grid (see candidates),
which a dynamic program scans in O(K) per sample using the fast
distance transforms: tabulate() fills, for every sample n and grid
index k, the best energy of a prefix ending at value v[k]; backtrack()
then traces one optimal index per sample from the last table to the
first. Total cost O(K*N) time and O(K*N) memory for the tables, plus
the O(K log K) sort inside the grid construction. (Storing per-step
argmin pointers instead of the tables would shrink memory; the full
table keeps the trace a direct read of stored costs.)

Minimizers need not be unique; all argmin ties resolve to the smallest
grid index, so outputs are deterministic.
"""

import time
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .candidates import build_grid
from .core import Metric, Signal, check_alpha, energy


@dataclass(frozen=True)
class SolveReport:
    """Result of one solve: the minimizer and how it was obtained.

    energy is recomputed from the minimizer with core.energy, not read
    off the dynamic-programming tables. minimizer values are always
    members of the candidate grid.
    """

    minimizer: np.ndarray
    energy: float
    grid_size: int
    signal_length: int
    alpha: float
    elapsed_seconds: float

    def __post_init__(self):
        m = np.asarray(self.minimizer, dtype=np.float64)
        m.flags.writeable = False
        object.__setattr__(self, "minimizer", m)


def tabulate(signal, grid, alpha):
    """Partial-energy tables of the dynamic program, shape (N, K).

    Row n holds, for each grid index k, the minimal energy over the
    first n+1 samples among candidate sequences ending at grid value
    v[k]. Row 0 is the pure data cost; each later row adds the fast
    distance transform of the previous row plus the sample's data cost.

    The grid must contain the values the signal can attain (build_grid
    output or any superset).
    """
    alpha = check_alpha(alpha)
    v = grid.values
    if signal.metric is not grid.metric:
        raise ValueError("signal and grid metrics differ")
    if signal.metric is Metric.CIRCULAR:
        return _kernels.tabulate_circular(signal.values, signal.weights, v, alpha)
    return _kernels.tabulate_real(signal.values, signal.weights, v, alpha)


def backtrack(tables, grid, alpha, metric):
    """Minimizing grid index per sample, traced from the last table.

    The final index is the argmin of the last row; every earlier index
    minimizes its row plus alpha times the distance to the value chosen
    one step later. Ties break to the smallest index. Returns an int
    array of length N; the minimizer itself is grid.values[indices].
    """
    alpha = check_alpha(alpha)
    tables = np.ascontiguousarray(tables, dtype=np.float64)
    if tables.ndim != 2 or tables.shape[1] != grid.values.size:
        raise ValueError(
            "tables must be (N, K) with K matching the grid, got %r" % (tables.shape,)
        )
    return _kernels.backtrack_indices(
        tables, grid.values, alpha, metric is Metric.CIRCULAR
    )


def solve(signal, alpha):
    """Global minimizer of the L1-TV objective for one signal.

    Exact for both metrics: some global minimizer takes values only on
    the candidate grid, so scanning the grid with the dynamic program
    is a full search of the continuous problem. alpha = 0 and N = 1
    short-circuit to the data itself (zero-weight samples included,
    for determinism).
    """
    if not isinstance(signal, Signal):
        raise TypeError("signal must be a Signal, got %r" % type(signal).__name__)
    alpha = check_alpha(alpha)
    start = time.perf_counter()
    grid = build_grid(signal)
    if alpha == 0.0 or signal.n == 1:
        minimizer = signal.values.copy()
    else:
        tables = tabulate(signal, grid, alpha)
        path = backtrack(tables, grid, alpha, signal.metric)
        minimizer = grid.values[path]
    value = energy(signal, minimizer, alpha)
    elapsed = time.perf_counter() - start
    return SolveReport(
        minimizer=minimizer,
        energy=value,
        grid_size=grid.k,
        signal_length=signal.n,
        alpha=alpha,
        elapsed_seconds=elapsed,
    )
