"""What the regularization strength interpolates between.

At alpha=0 the solver returns the data; as alpha grows the output
merges into fewer and fewer constant pieces; past a finite threshold
it is one constant equal to a weighted median of the data. On the
circle the same holds with arc-length medians, including the fun
degenerate case of two antipodal points, where every angle is an
equally good median and the solver settles on a deterministic one.

Run: python demos/04_median_limits.py
"""

import numpy as np

from l1tv import Metric, Signal, solve
from l1tv.oracle import weighted_median_circular, weighted_median_real

rng = np.random.default_rng(15)
y = rng.integers(-3, 4, 9).astype(float)
w = rng.uniform(0.2, 2.0, 9)
signal = Signal(y, w)
print("data    :", y)
print("weights :", np.round(w, 2))

print("\n%-8s %-10s %s" % ("alpha", "pieces", "output"))
for alpha in (0.0, 0.5, 1.0, 2.0, 5.0, 40.0):
    out = solve(signal, alpha).minimizer
    pieces = 1 + int(np.sum(np.diff(out) != 0.0))
    print("%-8g %-10d %s" % (alpha, pieces, out))

mu = weighted_median_real(y, w)
flat = solve(signal, 40.0).minimizer
print("\nweighted median of the data: %g; flat solve value: %g" % (mu, flat[0]))

print("\ncircle, antipodal pair (0, pi):")
pair = Signal([0.0, np.pi], [1.0, 1.0], Metric.CIRCULAR)
print("  large alpha ->", solve(pair, 2.0).minimizer,
      "(every angle is a median here; ties resolve deterministically)")
print("  small alpha ->", solve(pair, 0.25).minimizer, "(keeping the data is cheaper)")
print("  median picked by the oracle:", weighted_median_circular([0.0, np.pi], [1.0, 1.0]))
