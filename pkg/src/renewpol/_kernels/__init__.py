"""Segment-scan kernels for the evaluation engine.

The compiled Cython module is preferred when present; a pure numpy
implementation with identical results is the fallback. Set the
environment variable ``RENEWPOL_PURE=1`` to force the fallback (used by
the benchmark and the cross-implementation tests).
"""

import os

from . import _pure

if os.environ.get("RENEWPOL_PURE"):
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _scan as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _pure
        BACKEND = "pure"

first_exceeding = _impl.first_exceeding
first_true = _impl.first_true
segment_records = _impl.segment_records

__all__ = ["BACKEND", "first_exceeding", "first_true", "segment_records"]
