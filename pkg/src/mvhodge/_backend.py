"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``MVHODGE_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and by the backend-equivalence tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

_py = _kernels_py

if os.environ.get("MVHODGE_PURE_PYTHON", "") not in ("", "0"):
    _impl = _py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _py

BACKEND = _impl.BACKEND
conv_acc = _impl.conv_acc
mn_character = _impl.mn_character


def count_transitive_factorizations(sigma, r):
    if len(sigma) > 8 and _impl is not _py:
        return _py.count_transitive_factorizations(sigma, r)
    return _impl.count_transitive_factorizations(sigma, r)


__all__ = ["BACKEND", "conv_acc", "mn_character", "count_transitive_factorizations"]
