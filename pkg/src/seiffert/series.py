"""Power-series constructions of Seiffert functions and their admission rules.

Four coefficient regimes are accepted, each backed by a membership theorem:

  general            f = z + sum_{n>=2} a_n z^n            with 0 <= a_n <= 1
  alternating_convex f = z + sum_{n>=2} (-1)^(n+1) a_n z^n with 1 = a1 >= a2 >= ...
                     and the sequence convex (2 a_k <= a_{k-1} + a_{k+1})
  odd_alternating    f = z - a1 z^3 + sum_{n>=2} (-1)^n a_n z^(2n+1)
                     with a1 <= 1/2 and 1 >= a2 >= a3 >= ... >= 0
  cubic              f = z + a z^3 with -1/2 <= a <= 1/2

The cubic gate deliberately keeps the symmetric range [-1/2, 1/2]; only the
lower end is forced by the band itself (the negative-coefficient side fails
near z = 1), the upper end is the conservative admission rule this package
commits to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import _kernels
from .core import SeiffertFunction, band_high, band_low
from .sampling import EPS, zgrid

KINDS = ("general", "alternating_convex", "odd_alternating", "cubic")


class SeriesSpecError(ValueError):
    """Coefficient list violates its kind's hypotheses."""

    def __init__(self, kind: str, index: int, reason: str):
        self.kind = kind
        self.index = index
        super().__init__(f"{kind}: a_{index} {reason}")


@dataclass(frozen=True)
class SeriesSpec:
    """Coefficient magnitudes plus evaluation truncation.

    coefficients are the magnitudes (a_1, a_2, ...) in the kind's own
    convention; rule generates them from the 1-based index when the family
    is given by a formula.  tail_bound is the worst-case truncation bound at
    z = 1 - eps assuming |a_n| <= 1 (rigorous but typically vacuous near 1;
    the per-z bound used by the band spot check is much tighter away from 1).
    """

    kind: str
    coefficients: Optional[tuple[float, ...]] = None
    rule: Optional[Callable[[int], float]] = None
    truncation: int = 64

    def magnitudes(self) -> np.ndarray:
        if self.coefficients is not None:
            return np.asarray(self.coefficients, dtype=float)
        if self.rule is None:
            raise SeriesSpecError(self.kind, 1, "missing (no coefficients, no rule)")
        return np.asarray(
            [self.rule(n) for n in range(1, self.truncation + 1)], dtype=float
        )

    @property
    def tail_bound(self) -> float:
        return float(self.tail_at(1.0 - EPS))

    def tail_at(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=float)
        n = len(self.magnitudes())
        if self.kind == "cubic":
            return np.zeros_like(z)
        if self.kind == "odd_alternating":
            return z ** (2 * n + 3) / (1.0 - z * z)
        return z ** (n + 1) / (1.0 - z)


def _check(cond: bool, kind: str, index: int, reason: str) -> None:
    if not cond:
        raise SeriesSpecError(kind, index, reason)


def validate_spec(spec: SeriesSpec) -> np.ndarray:
    """Return the magnitude array or raise with the first offending index."""
    a = spec.magnitudes()
    kind = spec.kind
    if kind not in KINDS:
        raise SeriesSpecError(kind, 0, f"unknown kind (expected one of {KINDS})")
    slack = 1e-12
    if kind == "cubic":
        _check(len(a) == 1, kind, len(a), "cubic takes a single coefficient")
        _check(-0.5 - slack <= a[0] <= 0.5 + slack, kind, 1, f"= {a[0]:g} outside [-1/2, 1/2]")
        return a
    if kind == "general":
        _check(abs(a[0] - 1.0) <= slack, kind, 1, f"= {a[0]:g}, must equal 1")
        for n in range(1, len(a)):
            _check(-slack <= a[n] <= 1.0 + slack, kind, n + 1, f"= {a[n]:g} outside [0, 1]")
        return a
    if kind == "alternating_convex":
        _check(abs(a[0] - 1.0) <= slack, kind, 1, f"= {a[0]:g}, must equal 1")
        for n in range(len(a)):
            _check(a[n] >= -slack, kind, n + 1, f"= {a[n]:g} negative")
            if n > 0:
                _check(a[n] <= a[n - 1] + slack, kind, n + 1, "increases")
        for k in range(1, len(a) - 1):
            _check(
                2 * a[k] <= a[k - 1] + a[k + 1] + slack,
                kind,
                k + 1,
                "breaks convexity (2a_k > a_(k-1) + a_(k+1))",
            )
        return a
    # odd_alternating
    _check(a[0] <= 0.5 + slack, kind, 1, f"= {a[0]:g} exceeds 1/2")
    for n in range(len(a)):
        _check(a[n] >= -slack, kind, n + 1, f"= {a[n]:g} negative")
    if len(a) > 1:
        _check(a[1] <= 1.0 + slack, kind, 2, f"= {a[1]:g} exceeds 1")
    for n in range(2, len(a)):
        _check(a[n] <= a[n - 1] + slack, kind, n + 1, "increases")
    return a


def _dense_coefficients(kind: str, a: np.ndarray) -> np.ndarray:
    """Signed ascending power coefficients c[0..D] of the series."""
    if kind == "cubic":
        c = np.zeros(4)
        c[1] = 1.0
        c[3] = a[0]
        return c
    if kind == "odd_alternating":
        c = np.zeros(2 * len(a) + 2)
        c[1] = 1.0
        for n in range(1, len(a) + 1):
            c[2 * n + 1] = a[n - 1] * (-1.0) ** n
        return c
    c = np.zeros(len(a) + 1)
    c[1] = 1.0
    for n in range(2, len(a) + 1):
        sign = 1.0 if kind == "general" else (-1.0) ** (n + 1)
        c[n] = sign * a[n - 1]
    return c


def build_series_seiffert(spec: SeriesSpec, name: Optional[str] = None) -> SeiffertFunction:
    """Evaluable truncated series with the band spot-checked on 256 points.

    Membership is guaranteed by the admission rules; the spot check guards
    against implementation slips and skips points where the truncation tail
    bound swamps the band gap (close to 1).
    """
    a = validate_spec(spec)
    coef = _dense_coefficients(spec.kind, a)

    def fn(z):
        return _kernels.polyval_ascending(coef, z)

    head = tuple(coef[1:9]) if len(coef) >= 9 else tuple(coef[1:])
    label = name or f"series[{spec.kind}]"

    z = zgrid(256)
    v = fn(z)
    tail = spec.tail_at(z)
    lo, hi = band_low(z), band_high(z)
    determinate = tail < 1e-6
    low_ok = v + tail >= lo - 1e-12
    high_ok = v - tail <= hi * (1 + 1e-12)
    bad = determinate & ~(low_ok & high_ok)
    if np.any(bad):
        k = int(np.argmax(bad))
        from .core import BandViolation

        raise BandViolation(label, float(z[k]), float(min(v[k] - lo[k], hi[k] - v[k])))
    # strictness is a sampled property for series members, not a theorem
    strict = bool(np.all(~determinate | ((v - tail > lo) & (v + tail < hi))))
    return SeiffertFunction(
        label,
        fn,
        series_head=head,
        strict=strict,
        value_at_one=float(coef.sum()) if spec.kind == "cubic" else None,
    )


class _Classification:
    __slots__ = ("kind", "reason")

    def __init__(self, kind: Optional[str], reason: str):
        self.kind = kind
        self.reason = reason

    def __iter__(self):
        yield self.kind
        yield self.reason

    def __repr__(self):
        return f"Classification(kind={self.kind!r}, reason={self.reason!r})"


def classify_series(coefficients, kind_hint: Optional[str] = None) -> _Classification:
    """First admission rule the magnitude list satisfies, or the rejection.

    Checked in order alternating_convex, odd_alternating, general (the most
    specific first, so the harmonic magnitudes classify as the alternating
    log-type series rather than the crude general gate).  A single number is
    tried as a cubic coefficient.  Never raises; rejection comes back as
    kind None plus the first rule failure of each attempted kind.
    """
    coeffs = tuple(float(c) for c in np.atleast_1d(np.asarray(coefficients, dtype=float)))
    order = (
        [kind_hint]
        if kind_hint is not None
        else (["cubic"] if len(coeffs) == 1 else ["alternating_convex", "odd_alternating", "general"])
    )
    reasons = []
    for kind in order:
        try:
            validate_spec(SeriesSpec(kind=kind, coefficients=coeffs))
            return _Classification(kind, "ok")
        except SeriesSpecError as e:
            reasons.append(str(e))
    return _Classification(None, "; ".join(reasons))


# ---------------------------------------------------------------------------
# the eight closed-form series members used as a verification corpus


def _hybrid(name, closed, odd_coeffs, head_len=8, cut=0.25):
    """Closed form away from 0, series below the cancellation cutoff."""
    coef = np.asarray(odd_coeffs, dtype=float)

    def fn(z):
        z = np.asarray(z, dtype=float)
        small = z < cut
        out = np.empty_like(z)
        with np.errstate(all="ignore"):
            out[~small] = closed(z[~small])
        out[small] = _kernels.polyval_ascending(coef, z[small])
        return out

    return SeiffertFunction(name, fn, series_head=tuple(coef[1:head_len + 1]), strict=True)


def _make_corollary_functions() -> dict[str, SeiffertFunction]:
    from .core import SEIFFERT_FUNCTIONS

    fact = math.factorial
    terms = 14

    def dense(pairs, degmax):
        c = np.zeros(degmax + 1)
        for d, v in pairs:
            if d <= degmax:
                c[d] = v
        return c

    sin_rem1 = dense(
        [(2 * m - 1, 6 * (-1.0) ** (m + 1) / fact(2 * m + 1)) for m in range(1, terms)],
        2 * terms,
    )
    sin_rem2 = dense(
        [(2 * m - 3, 120 * (-1.0) ** m / fact(2 * m + 1)) for m in range(2, terms)],
        2 * terms,
    )
    cos_rem1 = dense(
        [(2 * m - 1, 2 * (-1.0) ** (m + 1) / fact(2 * m)) for m in range(1, terms)],
        2 * terms,
    )
    cos_rem2 = dense(
        [(2 * m - 3, 24 * (-1.0) ** m / fact(2 * m)) for m in range(2, terms)],
        2 * terms,
    )
    log_rem1 = dense(
        [(n, (-1.0) ** (n + 1) * 2.0 / (n + 1)) for n in range(1, 40)], 40
    )
    log_rem2 = dense(
        [(n, (-1.0) ** (n + 1) * 3.0 / (n + 2)) for n in range(1, 40)], 40
    )

    funcs = {
        "log1p": SEIFFERT_FUNCTIONS["log1p"],
        "log_remainder_1": _hybrid(
            "log_remainder_1", lambda z: 2.0 * (z - np.log1p(z)) / z, log_rem1
        ),
        "log_remainder_2": _hybrid(
            "log_remainder_2",
            lambda z: 3.0 * (np.log1p(z) - z + 0.5 * z * z) / (z * z),
            log_rem2,
        ),
        "sin": SEIFFERT_FUNCTIONS["sin"],
        "sin_remainder_1": _hybrid(
            "sin_remainder_1", lambda z: 6.0 * (z - np.sin(z)) / (z * z), sin_rem1
        ),
        "sin_remainder_2": _hybrid(
            "sin_remainder_2",
            lambda z: 120.0 * (np.sin(z) - z + z**3 / 6.0) / z**4,
            sin_rem2,
        ),
        "cos_remainder_1": _hybrid(
            "cos_remainder_1", lambda z: 2.0 * (1.0 - np.cos(z)) / z, cos_rem1
        ),
        "cos_remainder_2": _hybrid(
            "cos_remainder_2",
            lambda z: 24.0 * (np.cos(z) - 1.0 + 0.5 * z * z) / z**3,
            cos_rem2,
        ),
    }
    return funcs


COROLLARY_FUNCTIONS: dict[str, SeiffertFunction] = _make_corollary_functions()


# coefficient rules available to the expression grammar
RULES: dict[str, Callable[[int], float]] = {
    "harmonic": lambda n: 1.0 / n,
    "inv_square": lambda n: 1.0 / (n * n),
    "exp": lambda n: 1.0 if n == 1 else 1.0 / math.factorial(n),
    "sin_odd": lambda n: 1.0 / math.factorial(2 * n + 1),
}
