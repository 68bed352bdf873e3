"""Distance transforms (lower envelopes) on non-uniform grids.

Given costs B over grid points v, the transform is

    D[k] = min over l of  B[l] + alpha * d(v[k], v[l])

i.e. the lower envelope of cones of slope alpha rooted at the grid
points. The fast versions run in O(K): one forward and one backward
sweep for the real line, and the same sweep over a thrice-unrolled
grid for the circle. naive_transform is the O(K^2) literal evaluation
kept as ground truth for tests.

Ties in the minimum keep the already-stored value, which never changes
D itself, only downstream argmin choices (handled in the solver).
"""

import numpy as np

from . import _kernels
from .core import Metric, check_alpha, distance


def _checked(costs, grid, alpha):
    b = np.ascontiguousarray(costs, dtype=np.float64)
    v = np.ascontiguousarray(grid, dtype=np.float64)
    if b.ndim != 1 or v.ndim != 1 or b.size != v.size:
        raise ValueError(
            "costs and grid must be 1-D and equally long, got %d and %d"
            % (b.size, v.size)
        )
    if b.size == 0:
        raise ValueError("costs must be non-empty")
    if not np.all(np.isfinite(b)):
        raise ValueError("costs must be finite")
    if np.any(np.diff(v) <= 0.0):
        raise ValueError("grid must be strictly ascending")
    return b, v, check_alpha(alpha)


def transform_real(costs, grid, alpha):
    """O(K) lower envelope over an ascending real grid.

    Equivalent to the direct minimum formula for every entry, computed
    by a single forward and a single backward sweep.
    """
    b, v, alpha = _checked(costs, grid, alpha)
    d = b.copy()
    _kernels.lower_envelope_inplace(d, v, alpha)
    return d


def transform_circular(costs, grid, alpha):
    """O(K) lower envelope under arc-length distance.

    The grid must be canonical angles in (-pi, pi], strictly ascending.
    Internally the costs are replicated onto the grid shifted by one
    full turn each way, one real-line sweep runs over the 3K points,
    and the middle block is returned.
    """
    b, v, alpha = _checked(costs, grid, alpha)
    if v[0] <= -np.pi or v[-1] > np.pi:
        raise ValueError("circular grid values must lie in (-pi, pi]")
    return _kernels.wrap_envelope(b, v, alpha)


def naive_transform(costs, grid, alpha, metric):
    """O(K^2) reference: evaluate the defining minimum for every entry."""
    b, v, alpha = _checked(costs, grid, alpha)
    if metric is Metric.CIRCULAR and (v[0] <= -np.pi or v[-1] > np.pi):
        raise ValueError("circular grid values must lie in (-pi, pi]")
    moves = alpha * distance(metric, v[:, None], v[None, :])
    return np.min(b[None, :] + moves, axis=1)
