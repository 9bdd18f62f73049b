"""Piecewise Chebyshev representations on a singularity-graded mesh.

This is the workhorse behind the integral operator: a function analytic on
[eps, 1-eps] (possibly with endpoint singularities just outside, like the
inverse hyperbolic tangent at 1) is stored panel by panel as Chebyshev
coefficients.  Panels shrink geometrically toward 1 so a fixed moderate
degree resolves sqrt/log behaviour there.  Antiderivatives are exact
coefficient operations, so repeated integration costs one cheap pass per
level.  Point evaluation dispatches to the compiled kernel when available.
"""

from __future__ import annotations

from typing import Callable

import numpy as np
from numpy.polynomial import chebyshev as _cheb

from . import _kernels

EPS = 1e-8


class QuadratureError(RuntimeError):
    """Panel fitting failed to converge (pathological integrand)."""


def graded_breaks(eps: float = EPS) -> np.ndarray:
    """Panel edges on [eps, 1-eps], geometrically refined toward 1."""
    pts = [eps, 0.5]
    k = 2
    while True:
        b = 1.0 - 0.5**k
        if b >= 1.0 - 2.0 * eps:
            break
        pts.append(b)
        k += 1
    pts.append(1.0 - eps)
    return np.asarray(pts)


def _cheb_nodes(n: int) -> np.ndarray:
    # Chebyshev points of the first kind on [-1, 1]
    j = np.arange(n)
    return np.cos(np.pi * (2 * j + 1) / (2 * n))


def _fit_coeffs(values: np.ndarray) -> np.ndarray:
    """Chebyshev coefficients interpolating values at first-kind points."""
    n = len(values)
    j = np.arange(n)
    k = np.arange(n)
    mat = np.cos(np.pi * np.outer(k, 2 * j + 1) / (2 * n))
    c = (2.0 / n) * mat @ values
    c[0] *= 0.5
    return c


class PiecewiseCheb:
    """Immutable panelized Chebyshev series with clamped evaluation."""

    __slots__ = ("breaks", "coefs", "degrees")

    def __init__(self, breaks: np.ndarray, coef_list: list[np.ndarray]):
        self.breaks = np.asarray(breaks, dtype=float)
        dmax = max(len(c) for c in coef_list)
        mat = np.zeros((len(coef_list), dmax))
        degs = np.empty(len(coef_list), dtype=np.int64)
        for i, c in enumerate(coef_list):
            mat[i, : len(c)] = c
            degs[i] = len(c)
        self.coefs = mat
        self.degrees = degs

    @classmethod
    def fit(
        cls,
        fn: Callable[[np.ndarray], np.ndarray],
        breaks: np.ndarray,
        tol: float = 1e-13,
        start_degree: int = 24,
        max_degree: int = 192,
        max_splits: int = 10,
        stall_tol: float = 1e-7,
    ) -> "PiecewiseCheb":
        """Adaptive per-panel fit: double the degree until the coefficient
        tail drops below tol (relative), split the panel when that fails.

        Steep-but-smooth panels (derivative ~1/ulp, e.g. a log singularity
        just outside the domain) bottom out at the node-quantization noise
        floor; those are accepted once the tail is below stall_tol since no
        refinement can do better in double precision.
        """
        out_breaks: list[float] = [float(breaks[0])]
        out_coefs: list[np.ndarray] = []

        def accept(c: np.ndarray, b: float, scale: float) -> None:
            keep = len(c)
            floor = 0.01 * tol * scale
            while keep > 2 and abs(c[keep - 1]) <= floor:
                keep -= 1
            out_breaks.append(b)
            out_coefs.append(c[:keep])

        def fit_panel(a: float, b: float, depth: int) -> None:
            n = start_degree
            while True:
                t = _cheb_nodes(n)
                x = 0.5 * (a + b) + 0.5 * (b - a) * t
                c = _fit_coeffs(np.asarray(fn(x), dtype=float))
                scale = max(1.0, float(np.max(np.abs(c))))
                tail = np.max(np.abs(c[-3:]))
                if tail <= tol * scale:
                    accept(c, b, scale)
                    return
                if n >= max_degree:
                    if tail <= stall_tol * scale:
                        accept(c, b, scale)
                        return
                    if depth >= max_splits:
                        raise QuadratureError(
                            f"no Chebyshev convergence on [{a:.6g}, {b:.6g}]"
                        )
                    m = 0.5 * (a + b)
                    fit_panel(a, m, depth + 1)
                    fit_panel(m, b, depth + 1)
                    return
                n *= 2

        for a, b in zip(breaks[:-1], breaks[1:]):
            fit_panel(float(a), float(b), 0)
        return cls(np.asarray(out_breaks), out_coefs)

    def __call__(self, x) -> np.ndarray:
        x = np.atleast_1d(np.asarray(x, dtype=float))
        return _kernels.piecewise_clenshaw(self.breaks, self.coefs, self.degrees, x)

    def antiderivative(self) -> "PiecewiseCheb":
        """F with F(breaks[0]) = 0, exact on each panel's coefficients."""
        coefs = []
        total = 0.0
        for i in range(len(self.degrees)):
            a, b = self.breaks[i], self.breaks[i + 1]
            c = self.coefs[i, : self.degrees[i]]
            ci = _cheb.chebint(c) * (0.5 * (b - a))
            left = _cheb.chebval(-1.0, ci)
            ci[0] += total - left
            coefs.append(ci)
            total = _cheb.chebval(1.0, ci)
        return PiecewiseCheb(self.breaks, coefs)

    @property
    def domain(self) -> tuple[float, float]:
        return float(self.breaks[0]), float(self.breaks[-1])

    @property
    def end_value(self) -> float:
        return float(self(np.asarray([self.breaks[-1]]))[0])

    @property
    def start_value(self) -> float:
        return float(self(np.asarray([self.breaks[0]]))[0])
