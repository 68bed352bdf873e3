"""Synthetic piecewise-constant instances and level quantization.

Noise is Laplacian, drawn by inverse CDF from numpy's seeded PCG64
generator so instances are reproducible from the seed alone; circular
noise is wrapped back to (-pi, pi] after adding.
"""

from dataclasses import dataclass

import numpy as np

from .candidates import antipode
from .core import TWO_PI, Metric, Signal, canonicalize_angle


@dataclass(frozen=True)
class SynthSpec:
    """Recipe for one synthetic instance.

    length / segments: samples and constant pieces (segments <= length).
    noise_scale: Laplacian scale b >= 0 (0 means clean data).
    quant_levels: if set, snap the noisy values to that many uniformly
    spaced levels (>= 2).
    """

    length: int
    segments: int
    noise_scale: float
    seed: int
    metric: Metric = Metric.CIRCULAR
    quant_levels: int = None

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("length must be >= 1")
        if not 1 <= self.segments <= self.length:
            raise ValueError("segments must be in [1, length]")
        if not self.noise_scale >= 0.0:
            raise ValueError("noise_scale must be >= 0")
        if self.quant_levels is not None and self.quant_levels < 2:
            raise ValueError("quant_levels must be >= 2")


def _laplace(rng, scale, size):
    # inverse CDF of the Laplace(0, scale) law applied to PCG64 uniforms
    if scale == 0.0:
        return np.zeros(size)
    q = rng.random(size) - 0.5
    return -scale * np.sign(q) * np.log(np.maximum(1.0 - 2.0 * np.abs(q), 1e-300))


def generate_piecewise_constant(spec):
    """Ground truth plus its noisy measurement signal.

    Segment boundaries are drawn uniformly without replacement, segment
    values uniformly over [0, 1] (real) or the circle (circular), and
    Laplacian noise of the requested scale is added (wrapped for the
    circular case). Deterministic given the seed.

    Returns (ground_truth, signal) where signal carries unit weights.
    """
    rng = np.random.default_rng(spec.seed)
    n = spec.length
    cuts = np.sort(rng.choice(np.arange(1, n), size=spec.segments - 1, replace=False))
    if spec.metric is Metric.CIRCULAR:
        levels = canonicalize_angle(rng.uniform(-np.pi, np.pi, spec.segments))
    else:
        levels = rng.uniform(0.0, 1.0, spec.segments)
    truth = np.empty(n)
    for value, lo, hi in zip(levels, np.r_[0, cuts], np.r_[cuts, n]):
        truth[lo:hi] = value

    if spec.noise_scale == 0.0:
        noisy = truth.copy()
    else:
        noisy = truth + _laplace(rng, spec.noise_scale, n)
        if spec.metric is Metric.CIRCULAR:
            noisy = canonicalize_angle(noisy)
    signal = Signal(noisy, None, spec.metric)
    if spec.quant_levels is not None:
        signal = quantize(signal, spec.quant_levels)
    return truth, signal


def circular_level_table(levels):
    """The canonical angles circular data is snapped to, sorted ascending.

    Levels sit (up to float rounding) at -pi + step, ..., pi with step
    2*pi/levels. For an even count the table is built pairwise from the
    larger-magnitude member of each antipodal pair, which makes the
    table exactly closed under antipode(): quantized circular data then
    keeps K <= levels even after antipodal augmentation.
    """
    if levels < 2:
        raise ValueError("levels must be >= 2")
    step = TWO_PI / levels
    raw = -np.pi + step * np.arange(1, levels + 1)
    raw[-1] = np.pi  # exact endpoint; keeps every level inside (-pi, pi]
    if levels % 2:
        return raw
    half = levels // 2
    a, b = raw[:half], raw[half:]  # antipodal index pairs
    anchor = np.where(np.abs(a) >= np.abs(b), a, b)
    # the +/- pi shift is exact only from magnitude >= pi/2; rounding can
    # leave both members a hair below, so nudge those anchors onto pi/2
    half_pi = np.pi / 2.0
    anchor = np.where(np.abs(anchor) < half_pi, np.copysign(half_pi, anchor), anchor)
    return np.sort(np.concatenate([anchor, antipode(anchor)]))


def quantize(signal, levels):
    """Snap every sample to the nearest of `levels` uniform levels.

    Real signals use levels spanning the data range endpoints; circular
    signals use levels spaced 2*pi/levels around the circle (see
    circular_level_table). Weights and metric pass through. Idempotent,
    and the result has at most `levels` distinct values.
    """
    levels = int(levels)
    if levels < 2:
        raise ValueError("levels must be >= 2")
    y = signal.values
    if signal.metric is Metric.REAL:
        lo = float(y.min())
        hi = float(y.max())
        if hi == lo:
            return Signal(y, signal.weights, signal.metric)
        table = lo + (hi - lo) / (levels - 1) * np.arange(levels)
        table[-1] = hi  # keep the range endpoints exact
        step = (hi - lo) / (levels - 1)
        idx = np.clip(np.floor((y - lo) / step + 0.5).astype(np.int64), 0, levels - 1)
    else:
        table = circular_level_table(levels)
        step = TWO_PI / levels
        at = np.floor((y + np.pi) / step + 0.5).astype(np.int64)
        idx = (at - 1) % levels
    return Signal(table[idx], signal.weights, signal.metric)
