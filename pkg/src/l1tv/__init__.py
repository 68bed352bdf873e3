"""Exact, non-iterative L1-TV regularization of univariate signals.

Supports real-valued and circle-valued data. The continuous problem is
solved exactly by restricting the search to a finite candidate grid and
scanning it with a dynamic program whose per-sample cost is reduced to
O(K) by distance transforms on non-uniform grids, for O(K*N) total.
"""

from .candidates import CandidateGrid, antipode, build_grid, unique_values
from .core import (
    Metric,
    Signal,
    canonicalize_angle,
    check_alpha,
    distance,
    energy,
)
from .dtransform import naive_transform, transform_circular, transform_real
from .solver import SolveReport, backtrack, solve, tabulate
from .synth import (
    SynthSpec,
    circular_level_table,
    generate_piecewise_constant,
    quantize,
)

__version__ = "0.1.0"

__all__ = [
    "CandidateGrid",
    "Metric",
    "Signal",
    "SolveReport",
    "SynthSpec",
    "antipode",
    "backtrack",
    "build_grid",
    "canonicalize_angle",
    "check_alpha",
    "circular_level_table",
    "distance",
    "energy",
    "generate_piecewise_constant",
    "naive_transform",
    "quantize",
    "solve",
    "tabulate",
    "transform_circular",
    "transform_real",
    "unique_values",
    "__version__",
]
