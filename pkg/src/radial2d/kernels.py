"""Backend selection for the Sturm kernels.

The compiled extension is used when it imports; setting
``RADIAL2D_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _sturm_py

if os.environ.get("RADIAL2D_PURE_PYTHON"):
    _impl = _sturm_py
else:
    try:
        from . import _sturm as _impl
    except ImportError:
        _impl = _sturm_py

BACKEND = "python" if _impl is _sturm_py else "cython"
sturm_count = _impl.sturm_count
bisect_lowest = _impl.bisect_lowest
