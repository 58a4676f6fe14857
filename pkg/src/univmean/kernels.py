"""Kernel dispatch: the compiled extension if it imports, numpy otherwise.

Set ``UNIVMEAN_PURE_PYTHON=1`` to force the numpy fallback.
"""
import os

from . import _fallback

BACKEND = "python"

if os.environ.get("UNIVMEAN_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _fallback
else:
    _impl = _fallback

horner = _impl.horner
reciprocal = _impl.reciprocal
winding_number = _impl.winding_number
segment_crossings = _impl.segment_crossings

__all__ = ["BACKEND", "horner", "reciprocal", "winding_number", "segment_crossings"]
