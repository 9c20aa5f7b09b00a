"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is.  Setting ``GRAFTKL_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels

if os.environ.get("GRAFTKL_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

UNREACHABLE = _impl.UNREACHABLE
MAX_DP_TERMINALS = _impl.MAX_DP_TERMINALS
MAX_SCAN_EDGES = _impl.MAX_SCAN_EDGES
MAX_TABLE_VERTICES = _impl.MAX_TABLE_VERTICES

all_pairs_bfs = _impl.all_pairs_bfs
pair_matching = _impl.pair_matching
join_size_table = _impl.join_size_table
scan_joins = _impl.scan_joins
path_minima = _impl.path_minima
min_circuit = _impl.min_circuit

__all__ = [
    "BACKEND",
    "UNREACHABLE",
    "MAX_DP_TERMINALS",
    "MAX_SCAN_EDGES",
    "MAX_TABLE_VERTICES",
    "all_pairs_bfs",
    "pair_matching",
    "join_size_table",
    "scan_joins",
    "path_minima",
    "min_circuit",
]
