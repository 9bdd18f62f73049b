"""Evaluation-kernel backend selection.

Prefers the compiled Cython module when it has been built; otherwise falls
back to the numpy implementation.  SEIFFERT_PURE_PYTHON=1 in the environment
forces the fallback (used by the benchmark and the backend-equivalence tests).
"""

from __future__ import annotations

import os

import numpy as np

from . import fallback

if os.environ.get("SEIFFERT_PURE_PYTHON") == "1":
    _impl = fallback
    BACKEND = "python"
else:
    try:
        from . import _cheb as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = fallback
        BACKEND = "python"


def clenshaw(coef, t):
    coef = np.ascontiguousarray(coef, dtype=np.float64)
    t = np.ascontiguousarray(t, dtype=np.float64)
    return _impl.clenshaw(coef, t)


def piecewise_clenshaw(breaks, coefs, degrees, x):
    breaks = np.ascontiguousarray(breaks, dtype=np.float64)
    coefs = np.ascontiguousarray(coefs, dtype=np.float64)
    degrees = np.ascontiguousarray(degrees, dtype=np.int64)
    x = np.ascontiguousarray(x, dtype=np.float64)
    return _impl.piecewise_clenshaw(breaks, coefs, degrees, x)


def polyval_ascending(coef, x):
    coef = np.ascontiguousarray(coef, dtype=np.float64)
    x = np.ascontiguousarray(x, dtype=np.float64)
    return _impl.polyval_ascending(coef, x)
