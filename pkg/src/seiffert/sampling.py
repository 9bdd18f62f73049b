"""Deterministic sampling helpers: z-grids and low-discrepancy (x, y) pairs."""

from __future__ import annotations

import numpy as np

EPS = 1e-8

# sup/inf sweeps of expressions built from 1/f or 1 - hat lose ~eps/z (or
# worse, sqrt-amplified) digits near 0; scans stay above this and the z -> 0
# endpoint is contributed via series limits instead
Z_SAFE = 1.0 / 512.0


def zgrid(n: int, eps: float = EPS) -> np.ndarray:
    """n points spanning [eps, 1-eps] including both clipped endpoints."""
    return np.linspace(eps, 1.0 - eps, n)


def safe_zgrid(n: int, eps: float = EPS) -> np.ndarray:
    """n points on [Z_SAFE, 1-eps]: the well-conditioned scan range."""
    return np.linspace(Z_SAFE, 1.0 - eps, n)


def interior_zgrid(n: int) -> np.ndarray:
    """n uniform points strictly inside (0,1): i/(n+1), i = 1..n."""
    return np.arange(1, n + 1, dtype=float) / (n + 1)


def halton(n: int, base: int, skip: int = 20) -> np.ndarray:
    """First n terms of the van der Corput sequence in the given base."""
    idx = np.arange(skip, skip + n)
    out = np.zeros(n)
    denom = 1.0
    while idx.max() > 0:
        denom *= base
        out += (idx % base) / denom
        idx = idx // base
    return out


def sample_pairs(n: int, ratio_decades: float = 4.0, scale_decades: float = 3.0):
    """Deterministic quasi-random positive pairs (x, y).

    Ratios x/y span 10**(+-ratio_decades) and the overall scale spans
    10**(+-scale_decades), both Halton-distributed, so the same n always
    yields the same pairs.
    """
    u = halton(n, 2)
    v = halton(n, 3)
    r = 10.0 ** ((2 * u - 1) * ratio_decades)  # x/y
    s = 10.0 ** ((2 * v - 1) * scale_decades)
    x = s * np.sqrt(r)
    y = s / np.sqrt(r)
    return x, y
