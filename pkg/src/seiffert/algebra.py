"""Band isometry, the gauge group on strict means, and argument shifting.

The map a_transform: f -> 1/f - 1/z sends the Seiffert band isometrically
onto functions bounded by 1.  Pushing addition through a gauge (an odd
continuous bijection of (-1,1) onto the reals) turns the strict members
into an abelian group whose neutral element is the identity function, i.e.
the arithmetic mean.  Shifting a mean's arguments toward their midpoint by
a factor t corresponds to f(t z)/t and is a homotopy onto the arithmetic
mean as t -> 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import Mean, SeiffertFunction, mean_from_seiffert, seiffert_from_mean


@dataclass(frozen=True)
class Gauge:
    """Odd continuous bijection (-1,1) -> R with gauge(0) = 0."""

    name: str
    forward: Callable[[np.ndarray], np.ndarray]
    inverse: Callable[[np.ndarray], np.ndarray]

    def validate(self, samples: int = 256, tol: float = 1e-12) -> None:
        u = np.linspace(-1 + 1e-6, 1 - 1e-6, samples)
        y = self.forward(u)
        if np.max(np.abs(self.inverse(y) - u)) > tol:
            raise ValueError(f"gauge {self.name}: inverse(forward) deviates")
        if np.max(np.abs(self.forward(-u) + y)) > tol:
            raise ValueError(f"gauge {self.name}: not odd")


ARTANH_GAUGE = Gauge("artanh", np.arctanh, np.tanh)


def a_transform(f: SeiffertFunction) -> Callable[[np.ndarray], np.ndarray]:
    """The band isometry 1/f - 1/z; values lie in [-1, 1]."""

    def g(z):
        z = np.asarray(z, dtype=float)
        with np.errstate(all="ignore"):
            return 1.0 / f(z) - 1.0 / z

    return g


def a_inverse(
    g: Callable[[np.ndarray], np.ndarray],
    name: str = "a_inv",
    *,
    strict: bool = False,
    series_head=None,
) -> SeiffertFunction:
    """Back from the bounded band: f = 1/(g + 1/z)."""

    def fn(z):
        z = np.asarray(z, dtype=float)
        return 1.0 / (g(z) + 1.0 / z)

    return SeiffertFunction(name, fn, strict=strict, series_head=series_head)


def _require_strict(f: SeiffertFunction) -> None:
    if not f.strict:
        raise ValueError(
            f"{f.name} is not strict: its band transform touches +-1 where the gauge is undefined"
        )


def oplus(
    f: SeiffertFunction, g: SeiffertFunction, gauge: Gauge = ARTANH_GAUGE
) -> SeiffertFunction:
    """Group addition of strict Seiffert functions under the gauge."""
    _require_strict(f)
    _require_strict(g)
    af = a_transform(f)
    ag = a_transform(g)

    def fn(z):
        z = np.asarray(z, dtype=float)
        with np.errstate(all="ignore"):
            s = gauge.inverse(gauge.forward(af(z)) + gauge.forward(ag(z)))
            return 1.0 / (s + 1.0 / z)

    return SeiffertFunction(f"oplus({f.name},{g.name})", fn, strict=True)


def seiffert_negate(f: SeiffertFunction) -> SeiffertFunction:
    """Group inverse: the band transform negated (the mean 2A - M)."""
    _require_strict(f)
    af = a_transform(f)

    def fn(z):
        z = np.asarray(z, dtype=float)
        return 1.0 / (1.0 / z - af(z))

    head = None
    if f.series_head is not None and len(f.series_head) >= 3 and f.series_head[1] == 0:
        # leading behaviour mirrors: z + c3 z^3 -> z - c3 z^3
        head = (1.0, 0.0) + tuple(-c for c in f.series_head[2:])
    return SeiffertFunction(f"neg({f.name})", fn, strict=True, series_head=head)


def oplus_mean(M: Mean, N: Mean, gauge: Gauge = ARTANH_GAUGE) -> Mean:
    h = oplus(seiffert_from_mean(M), seiffert_from_mean(N), gauge)
    out = mean_from_seiffert(h, validate=False)
    return Mean(f"oplus({M.name},{N.name})", out._fn, strict=True)


def mean_reflect(M: Mean) -> Mean:
    """2A - M, the group inverse on the mean side."""

    def fn(x, y):
        return x + y - M._fn(x, y)

    head = None
    if M.seiffert_series_head is not None and len(M.seiffert_series_head) >= 3:
        h = M.seiffert_series_head
        if h[1] == 0:
            head = (1.0, 0.0) + tuple(-c for c in h[2:])
    return Mean(f"neg({M.name})", fn, strict=M.strict, seiffert_series_head=head)


# ---------------------------------------------------------------------------
# argument shifting


class ShiftedMean(Mean):
    """M evaluated at the pair contracted toward the midpoint by factor t."""

    __slots__ = ("base", "t")

    def __init__(self, base: Mean, t: float):
        if not 0.0 < t <= 1.0:
            raise ValueError(f"shift factor t={t:g} outside (0, 1]")
        self.base = base
        self.t = float(t)

        def fn(x, y):
            mid = 0.5 * (x + y)
            half = 0.5 * (x - y)
            return base._fn(mid - t * half, mid + t * half)

        head = None
        if base.seiffert_series_head is not None:
            head = tuple(
                c * t**k for k, c in enumerate(base.seiffert_series_head)
            )
        strict = True if t < 1.0 else base.strict
        super().__init__(
            f"shift({base.name},{t:g})", fn, strict=strict, seiffert_series_head=head
        )


def shift_mean(M: Mean, t: float) -> ShiftedMean:
    return ShiftedMean(M, t)


def shift_seiffert(f: SeiffertFunction, t: float) -> SeiffertFunction:
    """f(t z)/t, the Seiffert side of the midpoint contraction."""
    if not 0.0 < t <= 1.0:
        raise ValueError(f"shift factor t={t:g} outside (0, 1]")

    def fn(z):
        return f(t * np.asarray(z, dtype=float)) / t

    head = None
    if f.series_head is not None:
        head = tuple(c * t**k for k, c in enumerate(f.series_head))
    v1 = f(t) / t
    return SeiffertFunction(
        f"shift({f.name},{t:g})",
        fn,
        series_head=head,
        strict=True if t < 1.0 else f.strict,
        value_at_one=v1,
    )
