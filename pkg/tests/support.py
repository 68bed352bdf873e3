"""Seeded instance generators shared across test modules."""

import numpy as np

from l1tv import Metric, Signal, canonicalize_angle

ALPHAS = (0.1, 0.5, 1.0, 3.0)


def random_real_instance(rng, max_n=6, max_alphabet=5):
    """Small real signal with values from a small alphabet, weights in [0, 2]."""
    n = int(rng.integers(1, max_n + 1))
    alphabet = rng.uniform(-3.0, 3.0, int(rng.integers(1, max_alphabet + 1)))
    values = rng.choice(alphabet, n)
    weights = rng.uniform(0.0, 2.0, n)
    if not np.any(weights > 0):
        weights[0] = 1.0
    return Signal(values, weights, Metric.REAL)


def random_circular_instance(rng, max_n=5, max_alphabet=4):
    """Small circular signal; alphabet size keeps K <= 8 after augmentation."""
    n = int(rng.integers(1, max_n + 1))
    alphabet = canonicalize_angle(
        rng.uniform(-np.pi, np.pi, int(rng.integers(1, max_alphabet + 1)))
    )
    values = rng.choice(alphabet, n)
    weights = rng.uniform(0.0, 2.0, n)
    if not np.any(weights > 0):
        weights[0] = 1.0
    return Signal(values, weights, Metric.CIRCULAR)


def random_transform_case(rng, metric, max_k=512, max_cost=10.0, max_alpha=10.0):
    """Random ascending grid, nonnegative costs, and alpha for one transform."""
    k = int(rng.integers(1, max_k + 1))
    if metric is Metric.REAL:
        grid = np.sort(rng.uniform(-1000.0, 1000.0, k))
    else:
        grid = np.sort(canonicalize_angle(rng.uniform(-np.pi, np.pi, k)))
    while np.any(np.diff(grid) <= 0):  # resample exact duplicates (rare)
        grid = np.sort(
            rng.uniform(-1000.0, 1000.0, k)
            if metric is Metric.REAL
            else canonicalize_angle(rng.uniform(-np.pi, np.pi, k))
        )
    costs = rng.uniform(0.0, max_cost, k)
    alpha = float(rng.uniform(0.0, max_alpha))
    return costs, grid, alpha


def relative_gap(a, b):
    """Largest entrywise |a-b| scaled by the larger magnitude (0 for 0==0)."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    scale = np.maximum(np.abs(a), np.abs(b))
    gap = np.abs(a - b)
    ok = scale > 0
    out = np.zeros_like(gap)
    out[ok] = gap[ok] / scale[ok]
    out[~ok] = np.where(gap[~ok] == 0.0, 0.0, np.inf)
    return float(out.max()) if out.size else 0.0
