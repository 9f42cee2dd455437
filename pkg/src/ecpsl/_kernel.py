"""Kernel selection: the compiled extension when it imports, else pure Python.

Set ``ECPSL_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernel

OP_AND = _pykernel.OP_AND
OP_OR = _pykernel.OP_OR
OP_DIFF = _pykernel.OP_DIFF
OP_XOR = _pykernel.OP_XOR

_impl = _pykernel
BACKEND = "python"

if not os.environ.get("ECPSL_PURE_PYTHON"):
    try:
        from . import _ckernel as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernel

combine = _impl.combine
rescale = _impl.rescale
reduce_scale = _impl.reduce_scale
