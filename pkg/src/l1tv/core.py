"""Signal containers, angle handling, and the two point distances.

Everything downstream (grids, transforms, the solver) is built on the
functions in this module. All types are immutable after construction
and all operations are pure, so they are safe to share across threads.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

TWO_PI = 2.0 * math.pi


class Metric(Enum):
    """Data space of a signal: the real line or the unit circle."""

    REAL = "real"
    CIRCULAR = "circular"


def check_alpha(alpha):
    """Validate a regularization strength; returns it as a plain float.

    alpha trades data fidelity against the jump penalty. It must be
    finite and nonnegative; alpha = 0 is accepted as the degenerate
    "no smoothing" case.
    """
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha < 0.0:
        raise ValueError("alpha must be finite and >= 0, got %r" % alpha)
    return alpha


def canonicalize_angle(theta):
    """Map angles (radians) to the half-open interval (-pi, pi].

    Accepts a scalar or an array. Values already in (-pi, pi] pass
    through unchanged, so the map is exactly idempotent; -pi is
    remapped to pi so every angle has a unique representation.

    Raises ValueError on non-finite input.
    """
    arr = np.asarray(theta, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError("angle must be finite")
    phi = np.remainder(arr + np.pi, TWO_PI)  # in [0, 2*pi], 0 == -pi == pi
    wrapped = np.where(phi <= 0.0, np.pi, phi - np.pi)
    out = np.where((arr > -np.pi) & (arr <= np.pi), arr, wrapped)
    if arr.ndim == 0:
        return float(out)
    return out


def distance(metric, u, v):
    """Pointwise distance between u and v under the given metric.

    Real: absolute difference |u - v|. Circular: arc length on the
    unit circle, always in [0, pi]; circular inputs are assumed
    canonical (see canonicalize_angle). Broadcasts like a ufunc.
    """
    diff = np.abs(np.asarray(u, dtype=np.float64) - np.asarray(v, dtype=np.float64))
    if metric is Metric.REAL:
        return diff
    if metric is Metric.CIRCULAR:
        return np.minimum(diff, TWO_PI - diff)
    raise TypeError("metric must be a Metric, got %r" % (metric,))


@dataclass(frozen=True)
class Signal:
    """An ordered sequence of samples with per-sample weights.

    values  : 1-D float array, length N >= 1. Circular values are
              canonicalized to (-pi, pi] on construction.
    weights : 1-D nonnegative float array of the same length; at
              least one weight must be positive. None means all ones.
    metric  : the data space the samples live in.

    The stored arrays are copies with the writeable flag cleared.
    """

    values: np.ndarray
    weights: np.ndarray = None
    metric: Metric = Metric.REAL

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64, copy=True)
        if values.ndim != 1 or values.size < 1:
            raise ValueError("values must be a 1-D sequence with at least one sample")
        if not np.all(np.isfinite(values)):
            raise ValueError("values must be finite")
        if not isinstance(self.metric, Metric):
            raise TypeError("metric must be a Metric, got %r" % (self.metric,))
        if self.metric is Metric.CIRCULAR:
            values = canonicalize_angle(values)

        if self.weights is None:
            weights = np.ones(values.size, dtype=np.float64)
        else:
            weights = np.array(self.weights, dtype=np.float64, copy=True)
        if weights.shape != values.shape:
            raise ValueError(
                "weights must match values: %d weights for %d samples"
                % (weights.size, values.size)
            )
        if not np.all(np.isfinite(weights)) or np.any(weights < 0.0):
            raise ValueError("weights must be finite and >= 0")
        if not np.any(weights > 0.0):
            raise ValueError("at least one weight must be positive")

        values.flags.writeable = False
        weights.flags.writeable = False
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "weights", weights)

    @property
    def n(self):
        return self.values.size


def energy(signal, x, alpha):
    """The regularization objective evaluated at a candidate signal x.

    Returns alpha * sum of distances between consecutive entries of x
    plus the weighted sum of distances between x and the data. x must
    have the same length as the signal (circular x assumed canonical).
    """
    alpha = check_alpha(alpha)
    x = np.asarray(x, dtype=np.float64)
    if x.shape != signal.values.shape:
        raise ValueError(
            "x must match the signal length: got %d, expected %d"
            % (x.size, signal.values.size)
        )
    jumps = distance(signal.metric, x[:-1], x[1:])
    misfit = distance(signal.metric, x, signal.values)
    return float(alpha * np.sum(jumps) + np.sum(signal.weights * misfit))
