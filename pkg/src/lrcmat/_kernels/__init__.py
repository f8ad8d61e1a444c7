"""Kernel backend selection.

The compiled Cython module is preferred when it built successfully;
otherwise the pure-Python implementations are used. Set the
environment variable ``LRCMAT_PURE_KERNELS=1`` to force the fallback
(used by the benchmark and by tests that compare the two paths).
"""

import os

from . import _pure

if os.environ.get("LRCMAT_PURE_KERNELS") == "1":
    _impl = _pure
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND
rank_table_from_flats = _impl.rank_table_from_flats
rank_table_from_independent = _impl.rank_table_from_independent
max_deficient_size = _impl.max_deficient_size

__all__ = [
    "BACKEND",
    "rank_table_from_flats",
    "rank_table_from_independent",
    "max_deficient_size",
]
