"""Scalar search utilities: golden-section refinement and monotone inversion."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(f: Callable[[float], float], a: float, b: float, xtol: float = 1e-10):
    """Locate the maximum of a unimodal f on [a, b] to within xtol in x."""
    h = b - a
    if h <= xtol:
        x = 0.5 * (a + b)
        return x, f(x)
    c = b - INV_PHI * h
    d = a + INV_PHI * h
    fc, fd = f(c), f(d)
    while h > xtol:
        if fc > fd:
            b, d, fd = d, c, fc
            h = b - a
            c = b - INV_PHI * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + INV_PHI * h
            fd = f(d)
    x = 0.5 * (a + b)
    fx = f(x)
    # keep the best probed value in case f is locally flat
    if fc > fx:
        x, fx = c if fc > fd else d, max(fc, fd)
    return x, fx


def scan_and_refine(
    f: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    n: int = 2048,
    xtol: float = 1e-10,
):
    """Coarse grid scan for sup f followed by golden-section refinement.

    f must accept numpy arrays.  Returns (x, value, at_endpoint) where
    at_endpoint is 'lower'/'upper' when the best point sits on the boundary
    of [lo, hi], else None.
    """
    xs = np.linspace(lo, hi, n)
    vals = np.asarray(f(xs), dtype=float)
    k = int(np.nanargmax(vals))
    if k == 0:
        return lo, float(vals[0]), "lower"
    if k == n - 1:
        return hi, float(vals[-1]), "upper"
    a, b = xs[k - 1], xs[k + 1]
    x, v = golden_max(lambda t: float(f(np.asarray([t]))[0]), a, b, xtol)
    if v < vals[k]:
        x, v = float(xs[k]), float(vals[k])
    return x, v, None


def invert_monotone(
    f: Callable[[float], float],
    y: float,
    lo: float,
    hi: float,
    increasing: bool,
    xtol: float = 1e-13,
    max_iter: int = 200,
) -> float:
    """Solve f(x) = y for monotone f on [lo, hi] by bisection."""
    a, b = lo, hi
    fa = f(a)
    fb = f(b)
    if increasing:
        if y <= fa:
            return a
        if y >= fb:
            return b
    else:
        if y >= fa:
            return a
        if y <= fb:
            return b
    for _ in range(max_iter):
        m = 0.5 * (a + b)
        if b - a <= xtol:
            return m
        fm = f(m)
        if (fm < y) == increasing:
            a = m
        else:
            b = m
    return 0.5 * (a + b)
