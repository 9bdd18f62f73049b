"""Pure numpy implementations of the hot evaluation kernels.

Same call signatures as the compiled module _cheb; one of the two is picked
at import time by seiffert._kernels.
"""

from __future__ import annotations

import numpy as np


def clenshaw(coef: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Evaluate a Chebyshev series sum c_k T_k(t) for t in [-1, 1]."""
    b1 = np.zeros_like(t)
    b2 = np.zeros_like(t)
    t2 = 2.0 * t
    for k in range(len(coef) - 1, 0, -1):
        b1, b2 = t2 * b1 - b2 + coef[k], b1
    return t * b1 - b2 + coef[0]


def piecewise_clenshaw(
    breaks: np.ndarray,
    coefs: np.ndarray,
    degrees: np.ndarray,
    x: np.ndarray,
) -> np.ndarray:
    """Evaluate a piecewise Chebyshev representation at points x.

    breaks: (K+1,) increasing panel edges; coefs: (K, D) zero-padded rows;
    degrees[k] = number of active coefficients of panel k.  Points outside
    [breaks[0], breaks[-1]] are clamped to the nearest edge.
    """
    x = np.clip(x, breaks[0], breaks[-1])
    idx = np.clip(np.searchsorted(breaks, x, side="right") - 1, 0, len(breaks) - 2)
    out = np.empty_like(x)
    for k in np.unique(idx):
        sel = idx == k
        a, b = breaks[k], breaks[k + 1]
        t = (2.0 * x[sel] - (a + b)) / (b - a)
        out[sel] = clenshaw(coefs[k, : degrees[k]], t)
    return out


def polyval_ascending(coef: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Horner evaluation of sum c_k x^k with ascending coefficients."""
    out = np.zeros_like(x)
    for k in range(len(coef) - 1, -1, -1):
        out = out * x + coef[k]
    return out
