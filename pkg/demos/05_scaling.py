"""Runtime grows linearly in N once the data is quantized.

The per-sample cost of the dynamic program is O(K), so with the level
count pinned (here 360, the usual resolution of compass directions)
doubling the signal doubles the time. This demo times real solves on
growing instances and fits the log-log slope; expect a value near 1.
Sizes are kept modest so it finishes in seconds; raise them for a
sterner check.

Run: python demos/05_scaling.py
"""

import numpy as np

from l1tv.bench import records_to_csv, scaling_run, write_csv

lengths = [5_000, 10_000, 20_000, 40_000, 80_000]
records = scaling_run(k_fixed=360, lengths=lengths, repeats=3, seed=5)

print("%-10s %-6s %-10s %s" % ("N", "K", "seconds", "us per sample"))
for r in records:
    print("%-10d %-6d %-10.4f %.2f" % (r.n, r.k, r.seconds, 1e6 * r.seconds / r.n))

slope = np.polyfit(np.log([r.n for r in records]),
                   np.log([r.seconds for r in records]), 1)[0]
print("\nlog-log slope: %.3f (1.0 = perfectly linear)" % slope)

write_csv(records, "demo_scaling.csv")
print("wrote demo_scaling.csv:")
print(records_to_csv(records), end="")
