"""The O(K) lower envelope that makes the solver fast.

Each dynamic-programming step needs, for every candidate value v[k],
the cheapest previous cost plus alpha times the move distance. Done
literally that is a K-by-K scan; the two-sweep transform gets the same
numbers in O(K), and a thrice-unrolled copy of the grid handles the
circle. This demo checks both against the literal scan and shows the
cone picture.

Run: python demos/03_distance_transform.py
"""

import numpy as np

from l1tv import Metric, naive_transform, transform_circular, transform_real

rng = np.random.default_rng(3)

k = 14
grid = np.sort(rng.uniform(-2.0, 2.0, k))  # deliberately non-uniform
costs = rng.uniform(0.0, 3.0, k)
alpha = 1.2

fast = transform_real(costs, grid, alpha)
slow = naive_transform(costs, grid, alpha, Metric.REAL)
print("real line, K=%d: max |fast - naive| = %.3g" % (k, np.max(np.abs(fast - slow))))
print("lowered entries:", int(np.sum(fast < costs)), "of", k)

# on the circle: a single cheap candidate near +pi should also pull
# down candidates near -pi, which are close to it the short way round
cgrid = np.linspace(-0.95 * np.pi, 0.95 * np.pi, k)
ccosts = np.full(k, 3.0)
ccosts[-1] = 0.0
cfast = transform_circular(ccosts, cgrid, alpha)
cslow = naive_transform(ccosts, cgrid, alpha, Metric.CIRCULAR)
print("circle,    K=%d: max |fast - naive| = %.3g" % (k, np.max(np.abs(cfast - cslow))))

wrap_wins = int(np.sum(cfast < transform_real(ccosts, cgrid, alpha)))
print("entries where wrapping around +/-pi was the cheaper route:", wrap_wins)

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    x = np.linspace(grid[0] - 0.3, grid[-1] + 0.3, 600)
    cones = costs[None, :] + alpha * np.abs(x[:, None] - grid[None, :])
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.plot(x, cones, color="0.8", lw=0.7)
    ax.plot(x, cones.min(axis=1), "C1", lw=1.8, label="lower envelope")
    ax.plot(grid, costs, "ko", ms=4, label="costs B")
    ax.plot(grid, fast, "C0s", ms=4, label="transform D")
    ax.legend()
    fig.tight_layout()
    fig.savefig("demo_distance_transform.png", dpi=120)
    print("wrote demo_distance_transform.png")
except ImportError:
    print("matplotlib not installed; skipping the plot")
