"""Selects the compiled kernels when available, else the pure-Python ones.

Set ``PERMCODES_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("PERMCODES_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

subset_weights = _impl.subset_weights
min_subset_weight = _impl.min_subset_weight
