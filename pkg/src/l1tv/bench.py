"""Runtime scaling checks and the slow reference tabulation.

scaling_run times the full solver on quantized circular instances of
growing length at a fixed level count; with K fixed the cost per
sample is constant, so runtimes should grow linearly in N.
"""

import io
import time
from dataclasses import dataclass

import numpy as np

from .core import Metric, check_alpha, distance
from .solver import solve
from .synth import SynthSpec, generate_piecewise_constant


@dataclass(frozen=True)
class BenchRecord:
    metric: Metric
    n: int
    k: int
    alpha: float
    seconds: float
    energy: float


def naive_tabulate(signal, grid, alpha):
    """Literal O(K^2 N) tabulation, the reference for the fast version.

    Fills each row by scanning all K predecessors per entry instead of
    using the distance transform. Builds a K-by-K move-cost matrix, so
    keep K modest.
    """
    alpha = check_alpha(alpha)
    v = grid.values
    y = signal.values
    w = signal.weights
    moves = alpha * distance(signal.metric, v[:, None], v[None, :])
    tables = np.empty((signal.n, v.size))
    tables[0] = w[0] * distance(signal.metric, v, y[0])
    for n in range(1, signal.n):
        best_move = np.min(tables[n - 1][None, :] + moves, axis=1)
        tables[n] = w[n] * distance(signal.metric, v, y[n]) + best_move
    return tables


def scaling_run(k_fixed, lengths, repeats=3, seed=0, alpha=0.5):
    """Median solve times on quantized circular instances of growing N.

    Per length, one warm-up solve runs first and is discarded: it pays
    the JIT compilation and first-touch page faults of the length's
    working set, so the timed repeats measure the algorithm rather
    than the allocator. Returns one BenchRecord per length, in order.
    """
    lengths = [int(n) for n in lengths]
    if any(b <= a for a, b in zip(lengths, lengths[1:])):
        raise ValueError("lengths must be strictly ascending")

    def instance(n):
        spec = SynthSpec(
            length=n,
            segments=min(10, n),
            noise_scale=0.5,
            seed=seed,
            metric=Metric.CIRCULAR,
            quant_levels=k_fixed,
        )
        return generate_piecewise_constant(spec)[1]

    records = []
    for n in lengths:
        signal = instance(n)
        solve(signal, alpha)  # warm-up, discarded
        times = []
        report = None
        for _ in range(repeats):
            t0 = time.perf_counter()
            report = solve(signal, alpha)
            times.append(time.perf_counter() - t0)
        records.append(
            BenchRecord(
                metric=Metric.CIRCULAR,
                n=n,
                k=report.grid_size,
                alpha=alpha,
                seconds=float(np.median(times)),
                energy=report.energy,
            )
        )
    return records


def records_to_csv(records):
    """CSV text for a list of BenchRecords."""
    out = io.StringIO()
    out.write("metric,N,K,alpha,seconds,energy\n")
    for r in records:
        out.write(
            "%s,%d,%d,%.17g,%.17g,%.17g\n"
            % (r.metric.value, r.n, r.k, r.alpha, r.seconds, r.energy)
        )
    return out.getvalue()


def write_csv(records, path):
    with open(path, "w") as fh:
        fh.write(records_to_csv(records))
