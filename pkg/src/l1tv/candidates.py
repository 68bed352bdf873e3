"""Finite candidate grids guaranteed to contain a global minimizer's values.

For real data the grid is the sorted distinct data values; for circular
data the antipodes of the data values are added as well. Deduplication
is by exact floating-point equality after canonicalization, so noisy
real data keeps near-duplicates distinct (use quantization to shrink K
deliberately).
"""

from dataclasses import dataclass

import numpy as np

from .core import Metric


@dataclass(frozen=True)
class CandidateGrid:
    """Strictly ascending candidate values, length K >= 1."""

    values: np.ndarray
    metric: Metric

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64, copy=True)
        if values.ndim != 1 or values.size < 1:
            raise ValueError("grid must hold at least one value")
        if not np.all(np.isfinite(values)):
            raise ValueError("grid values must be finite")
        if np.any(np.diff(values) <= 0.0):
            raise ValueError("grid values must be strictly ascending")
        if self.metric is Metric.CIRCULAR:
            if values[0] <= -np.pi or values[-1] > np.pi:
                raise ValueError("circular grid values must lie in (-pi, pi]")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def k(self):
        return self.values.size

    def __len__(self):
        return self.values.size

    def contains(self, x):
        """Exact membership of each entry of x in the grid."""
        return np.isin(np.asarray(x, dtype=np.float64), self.values)


def unique_values(y):
    """Sorted distinct values occurring in y (exact equality)."""
    arr = np.asarray(y, dtype=np.float64)
    if arr.ndim != 1 or arr.size < 1:
        raise ValueError("need a 1-D sequence with at least one value")
    return np.unique(arr)


def antipode(theta):
    """Diametrically opposite point(s) of canonical angle(s).

    Computed as a single +/- pi shift of the canonical representative,
    which keeps the shift exact in floating point whenever |theta| >=
    pi/2 (one member of every antipodal pair satisfies this, so pairs
    generated from that member are exact two-cycles).
    """
    arr = np.asarray(theta, dtype=np.float64)
    out = np.where(arr > 0.0, arr - np.pi, arr + np.pi)
    # theta slightly above 0 can round down to exactly -pi; keep canonical
    out = np.where(out == -np.pi, np.pi, out)
    if arr.ndim == 0:
        return float(out)
    return out


def build_grid(signal):
    """Candidate grid for an exact search over the signal's data space.

    Real signals: the distinct data values (K <= N). Circular signals:
    the distinct data values together with their antipodes (K <= 2N).
    """
    if signal.metric is Metric.REAL:
        vals = np.unique(signal.values)
    else:
        vals = np.unique(np.concatenate([signal.values, antipode(signal.values)]))
    return CandidateGrid(vals, signal.metric)
