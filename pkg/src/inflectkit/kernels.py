"""Kernel selection: compiled extension when built, pure Python otherwise.

Set ``INFLECTKIT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("INFLECTKIT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

align_ops = _impl.align_ops
levenshtein = _impl.levenshtein

#: "compiled" or "python"
BACKEND = "python" if _impl is _kernels_py else "compiled"

INS_COST = _kernels_py.INS_COST
DEL_COST = _kernels_py.DEL_COST
SUB_COST = _kernels_py.SUB_COST
