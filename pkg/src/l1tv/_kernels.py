"""Compiled inner loops for the transforms, the tabulation, and the
backtracking. The sweeps carry a loop-to-loop dependence, so they are
written as plain sequential loops and jitted.
"""

import numpy as np
from numba import njit

_TWO_PI = 2.0 * np.pi


@njit(cache=True)
def lower_envelope_inplace(d, v, alpha):
    """Two-pass min-cost sweep: on return d[k] = min_l d_in[l] + alpha*|v[k]-v[l]|."""
    k_count = d.size
    for k in range(1, k_count):
        c = d[k - 1] + alpha * (v[k] - v[k - 1])
        if c < d[k]:
            d[k] = c
    for k in range(k_count - 2, -1, -1):
        c = d[k + 1] + alpha * (v[k + 1] - v[k])
        if c < d[k]:
            d[k] = c


@njit(cache=True)
def wrap_envelope(b, v, alpha):
    """Circular transform: triple the grid by +/- one turn, run the real
    sweep on the 3K unrolled copy, return the middle block."""
    k_count = b.size
    bp = np.empty(3 * k_count)
    vp = np.empty(3 * k_count)
    for k in range(k_count):
        bp[k] = b[k]
        bp[k_count + k] = b[k]
        bp[2 * k_count + k] = b[k]
        vp[k] = v[k] - _TWO_PI
        vp[k_count + k] = v[k]
        vp[2 * k_count + k] = v[k] + _TWO_PI
    lower_envelope_inplace(bp, vp, alpha)
    return bp[k_count : 2 * k_count].copy()


@njit(cache=True)
def _arc(a, b):
    d = abs(a - b)
    if d > np.pi:
        d = _TWO_PI - d
    return d


@njit(cache=True)
def tabulate_real(y, w, v, alpha):
    n_count = y.size
    k_count = v.size
    tables = np.empty((n_count, k_count))
    for k in range(k_count):
        tables[0, k] = w[0] * abs(v[k] - y[0])
    d = np.empty(k_count)
    for n in range(1, n_count):
        for k in range(k_count):
            d[k] = tables[n - 1, k]
        lower_envelope_inplace(d, v, alpha)
        for k in range(k_count):
            tables[n, k] = w[n] * abs(v[k] - y[n]) + d[k]
    return tables


@njit(cache=True)
def tabulate_circular(y, w, v, alpha):
    n_count = y.size
    k_count = v.size
    tables = np.empty((n_count, k_count))
    for k in range(k_count):
        tables[0, k] = w[0] * _arc(v[k], y[0])
    bp = np.empty(3 * k_count)
    vp = np.empty(3 * k_count)
    for k in range(k_count):
        vp[k] = v[k] - _TWO_PI
        vp[k_count + k] = v[k]
        vp[2 * k_count + k] = v[k] + _TWO_PI
    for n in range(1, n_count):
        for k in range(k_count):
            b = tables[n - 1, k]
            bp[k] = b
            bp[k_count + k] = b
            bp[2 * k_count + k] = b
        lower_envelope_inplace(bp, vp, alpha)
        for k in range(k_count):
            tables[n, k] = w[n] * _arc(v[k], y[n]) + bp[k_count + k]
    return tables


@njit(cache=True)
def backtrack_indices(tables, v, alpha, circular):
    """Trace the minimizing grid index per sample, last to first.
    Ties go to the smallest index."""
    n_count, k_count = tables.shape
    path = np.empty(n_count, np.int64)
    best = 0
    for k in range(1, k_count):
        if tables[n_count - 1, k] < tables[n_count - 1, best]:
            best = k
    path[n_count - 1] = best
    for n in range(n_count - 2, -1, -1):
        target = v[path[n + 1]]
        best = 0
        best_cost = np.inf
        for k in range(k_count):
            if circular:
                d = _arc(v[k], target)
            else:
                d = abs(v[k] - target)
            c = tables[n, k] + alpha * d
            if c < best_cost:
                best_cost = c
                best = k
        path[n] = best
    return path
