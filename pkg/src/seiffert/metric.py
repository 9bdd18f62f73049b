"""Sup-metric on Seiffert functions and the induced metric on means.

d(f, g) = sup over (0,1) of |1/f - 1/g|.  For the induced mean distance the
same number equals 2 sup |(M - N)/(x - y)|, which gives an independent
cross-check route through the mean formulas themselves.

Conditioning note: both reciprocals blow up like 1/z at 0, so evaluating
their difference there loses eps/z absolute digits.  The scan therefore
stays above a small floor and the z -> 0 endpoint is contributed exactly
from series data (the objective tends to |c2(f) - c2(g)|), falling back to
a near-zero evaluation when no series is available.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import Mean, SeiffertFunction, seiffert_from_mean
from .sampling import EPS, Z_SAFE
from .search import scan_and_refine


@dataclass(frozen=True)
class MetricResult:
    distance: float
    extremizer_z: float
    converged: bool
    endpoint: Optional[str] = None  # 'lower'/'upper' when the sup is an endpoint limit
    cross_check: Optional[float] = None  # mean-formula estimate, mean_distance only

    def __str__(self):
        where = f"z={self.extremizer_z:.12g}"
        if self.endpoint:
            where += f" ({self.endpoint} endpoint limit)"
        return f"distance={self.distance:.15g} at {where}"


def _zero_limit(f: SeiffertFunction, g: SeiffertFunction) -> Optional[float]:
    hf, hg = f.series_head, g.series_head
    if hf is None or hg is None or len(hf) < 2 or len(hg) < 2:
        return None
    if abs(hf[0] - 1.0) > 1e-9 or abs(hg[0] - 1.0) > 1e-9:
        return None
    # 1/f - 1/z -> -c2, so the objective tends to |c2(g) - c2(f)|
    return abs(float(hg[1]) - float(hf[1]))


def seiffert_distance(
    f: SeiffertFunction, g: SeiffertFunction, grid: int = 2048, xtol: float = 1e-10
) -> MetricResult:
    """Grid scan plus golden-section refinement of sup |1/f - 1/g|.

    Suprema attained only in an endpoint limit are reported with the
    endpoint marker; extremizer 0.0/1.0 then stands for the limit location.
    """

    def obj(z):
        with np.errstate(all="ignore"):
            return np.abs(1.0 / f(z) - 1.0 / g(z))

    x, v, endpoint = scan_and_refine(obj, Z_SAFE, 1.0 - EPS, n=grid, xtol=xtol)
    if endpoint == "upper":
        x = 1.0
    lim0 = _zero_limit(f, g)
    if lim0 is None:
        lim0 = float(obj(np.asarray([1e-6]))[0])
    if lim0 > v:
        return MetricResult(float(lim0), 0.0, True, "lower")
    return MetricResult(float(v), float(x), True, endpoint)


def mean_distance(
    M: Mean, N: Mean, grid: int = 2048, xtol: float = 1e-10, agree_tol: float = 1e-6
) -> MetricResult:
    """Distance between means, cross-checked through both formulas.

    Route one goes through the Seiffert representatives; route two sweeps
    2 |M - N| / |x - y| over pairs with x + y = 2 (homogeneity makes that
    restriction lossless).  Disagreement beyond agree_tol is reported as
    non-convergence.
    """
    fM = seiffert_from_mean(M)
    fN = seiffert_from_mean(N)
    primary = seiffert_distance(fM, fN, grid=grid, xtol=xtol)

    def mean_route(z):
        x = 1.0 - z
        y = 1.0 + z
        with np.errstate(all="ignore"):
            return np.abs(M(x, y) - N(x, y)) / z

    _, v2, _ = scan_and_refine(mean_route, Z_SAFE, 1.0 - EPS, n=grid, xtol=xtol)
    lim0 = _zero_limit(fM, fN)
    if lim0 is not None:
        v2 = max(v2, lim0)
    agree = abs(primary.distance - v2) <= agree_tol
    return MetricResult(
        primary.distance,
        primary.extremizer_z,
        agree,
        primary.endpoint,
        cross_check=float(v2),
    )
