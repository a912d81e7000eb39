"""Kernel lane selection.

The compiled Cython lane (``_fast``) is preferred when it built; the numpy
reference lane (``_ref``) is the fallback. Set ``LOSP_PURE_PYTHON=1`` to
force the reference lane, e.g. to reproduce results without a compiler.
``benchmarks/kernel_bench.py`` compares the two.
"""

import os

from . import _ref

if os.environ.get("LOSP_PURE_PYTHON"):
    _impl = _ref
    COMPILED = False
else:
    try:
        from . import _fast as _impl

        COMPILED = True
    except ImportError:
        _impl = _ref
        COMPILED = False

neighbor_sums = _impl.neighbor_sums
neighbors_in_mask = _impl.neighbors_in_mask
crossing_edges = _impl.crossing_edges
bfs_reach = _impl.bfs_reach
sweep_trace = _impl.sweep_trace
distance_moments = _impl.distance_moments
jacobi_eigh = _impl.jacobi_eigh

__all__ = [
    "COMPILED",
    "neighbor_sums",
    "neighbors_in_mask",
    "crossing_edges",
    "bfs_reach",
    "sweep_trace",
    "distance_moments",
    "jacobi_eigh",
]
