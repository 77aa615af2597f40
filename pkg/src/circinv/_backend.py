"""Kernel selection: compiled extension when available, else pure Python.

Set ``CIRCINV_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
kernels = _pykernels

if not os.environ.get("CIRCINV_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        kernels = _ckernels
        BACKEND = "cython"
