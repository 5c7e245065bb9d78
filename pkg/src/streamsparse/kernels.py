"""Kernel selection.

The compiled extension is used when it imports and the matrix dtype is
int64 or float64.  Everything else (object arrays of big ints, a missing
build, or ``STREAMSPARSE_PURE_PYTHON=1``) goes through ``_pykernels``.
"""

import os

import numpy as np

from . import _pykernels

try:
    if os.environ.get("STREAMSPARSE_PURE_PYTHON"):
        raise ImportError("pure-Python kernels requested")
    from . import _kernels
except ImportError:
    _kernels = None

HAVE_EXTENSION = _kernels is not None
_NATIVE = (np.dtype(np.int64), np.dtype(np.float64))


def _native(mat):
    return _kernels is not None and mat.dtype in _NATIVE


def stoer_wagner(mat):
    if _native(mat):
        return _kernels.stoer_wagner(np.ascontiguousarray(mat))
    return _pykernels.stoer_wagner(mat)


def edge_strength(mat, u, v):
    if _native(mat):
        return _kernels.edge_strength(np.ascontiguousarray(mat), u, v)
    return _pykernels.edge_strength(mat, u, v)


def backend():
    return "cython" if HAVE_EXTENSION else "python"
