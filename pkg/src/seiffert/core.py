"""Seiffert functions, bivariate means, and the bijection between them.

A Seiffert function is a real function f on the open unit interval pinched
between z/(1+z) and z/(1-z).  Every such f induces a symmetric homogeneous
mean

    S_f(x, y) = |x - y| / (2 f(|x - y| / (x + y))),   S_f(x, x) = x,

and conversely every symmetric, 1-homogeneous, between-min-and-max mean M
has the representative f_M(z) = z / M(1+z, 1-z).  The two constructions are
mutually inverse and order-reversing, which is what the comparison and bound
machinery in the sibling modules exploits.

All function objects here are immutable after construction and safe to
evaluate concurrently; evaluation accepts scalars or numpy arrays.
"""

from __future__ import annotations

import math
from typing import Callable, Optional, Sequence

import numpy as np

from .report import CheckRecord, VerificationReport
from .sampling import EPS, sample_pairs, zgrid

# below this value of |x-y|/(x+y) the mean evaluation switches to its
# first-order diagonal expansion (x+y)/2 when series data is available
DIAG_CUT = 1e-8

_UNSET = object()


class BandViolation(ValueError):
    """A claimed Seiffert function escapes the admissible band."""

    def __init__(self, name: str, witness_z: float, margin: float):
        self.witness_z = witness_z
        self.margin = margin
        super().__init__(
            f"{name}: band violated at z={witness_z:.12g} (margin {margin:.3g})"
        )


def band_low(z):
    return z / (1.0 + z)


def band_high(z):
    return z / (1.0 - z)


def _as_array_call(fn, z):
    z = np.asarray(z, dtype=float)
    if z.ndim == 0:
        return float(np.atleast_1d(fn(z.reshape(1)))[0])
    return np.asarray(fn(z), dtype=float)


class SeiffertFunction:
    """Evaluable function on (0,1) with band membership and z->0 metadata.

    series_head holds leading Taylor coefficients (c1, c2, c3, ...) of the
    expansion at 0 (c1 = 1 for every member); it drives small-z limits in the
    bound solvers and the diagonal branch of induced means.  value_at_one is
    the z->1 limit (may be inf) used for endpoint limits of sup/inf searches.
    """

    __slots__ = ("name", "_fn", "series_head", "strict", "_value_at_one", "hat_rep")

    def __init__(
        self,
        name: str,
        fn: Callable[[np.ndarray], np.ndarray],
        *,
        series_head: Optional[Sequence[float]] = None,
        strict: bool = False,
        value_at_one=_UNSET,
        hat_rep=None,
    ):
        self.name = name
        self._fn = fn
        self.series_head = None if series_head is None else tuple(series_head)
        self.strict = bool(strict)
        self._value_at_one = value_at_one
        self.hat_rep = hat_rep

    def __call__(self, z):
        return _as_array_call(self._fn, z)

    def hat(self, z):
        """The divided difference f(z)/z (monotonicity of this decides
        Schur convexity of the induced mean)."""
        if self.hat_rep is not None:
            return _as_array_call(self.hat_rep, z)
        z_arr = np.asarray(z, dtype=float)
        return self(z) / z_arr if z_arr.ndim else self(z) / float(z)

    @property
    def value_at_one(self) -> Optional[float]:
        if self._value_at_one is _UNSET:
            with np.errstate(all="ignore"):
                try:
                    v = self(1.0)
                except Exception:
                    v = math.nan
            self._value_at_one = None if math.isnan(v) else float(v)
        return self._value_at_one

    def __repr__(self):
        return f"SeiffertFunction({self.name!r}, strict={self.strict})"


class Mean:
    """Symmetric positively-1-homogeneous function between min and max.

    The constructor does not validate; catalog registration and
    validate_mean() do.  seiffert_series_head/strict are metadata carried
    over to the representative Seiffert function.
    """

    __slots__ = ("name", "_fn", "strict", "seiffert_series_head")

    def __init__(
        self,
        name: str,
        fn: Callable[[np.ndarray, np.ndarray], np.ndarray],
        *,
        strict: bool = False,
        seiffert_series_head: Optional[Sequence[float]] = None,
    ):
        self.name = name
        self._fn = fn
        self.strict = bool(strict)
        self.seiffert_series_head = (
            None if seiffert_series_head is None else tuple(seiffert_series_head)
        )

    def __call__(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.ndim == 0 and y.ndim == 0:
            return float(
                np.atleast_1d(self._fn(x.reshape(1), y.reshape(1)))[0]
            )
        x, y = np.broadcast_arrays(x, y)
        return np.asarray(self._fn(x, y), dtype=float)

    def __repr__(self):
        return f"Mean({self.name!r}, strict={self.strict})"


# ---------------------------------------------------------------------------
# the bijection


def mean_from_seiffert(f: SeiffertFunction, *, validate: bool = True) -> Mean:
    """Mean induced by a Seiffert function.

    The diagonal is a hard-coded branch (never evaluates f at 0); pairs with
    |x-y|/(x+y) below DIAG_CUT use the first-order expansion (x+y)/2 when f
    carries series data.  Raises BandViolation when f fails its band check.
    """
    if validate:
        rep = validate_seiffert(f)
        bad = [c for c in rep.checks if not c.passed and c.name.startswith("band")]
        if bad:
            worst = min(bad, key=lambda c: c.margin)
            raise BandViolation(f.name, worst.witness, worst.margin)

    has_series = f.series_head is not None

    def fn(x, y):
        s = x + y
        d = np.abs(x - y)
        with np.errstate(invalid="ignore", divide="ignore"):
            z = np.where(s > 0, d / s, 0.0)
        near = z < DIAG_CUT
        z_safe = np.where(near, 0.5, z)
        with np.errstate(invalid="ignore", divide="ignore"):
            off = d / (2.0 * f(z_safe))
        if has_series:
            diag = 0.5 * s
        else:
            tiny = np.where(near & (z > 0), z, 0.5)
            with np.errstate(invalid="ignore", divide="ignore"):
                diag = np.where(z > 0, d / (2.0 * f(tiny)), x)
        return np.where(near, np.where(d == 0, x, diag), off)

    return Mean(
        f"S[{f.name}]",
        fn,
        strict=f.strict,
        seiffert_series_head=f.series_head,
    )


def seiffert_from_mean(M: Mean) -> SeiffertFunction:
    """Representative Seiffert function f_M(z) = z / M(1+z, 1-z)."""

    def fn(z):
        return z / M._fn(1.0 + z, 1.0 - z)

    return SeiffertFunction(
        f"f[{M.name}]",
        fn,
        series_head=M.seiffert_series_head,
        strict=M.strict,
    )


# ---------------------------------------------------------------------------
# validation

TOL_REL = 1e-12


def validate_seiffert(f: SeiffertFunction, samples: int = 1024) -> VerificationReport:
    """Band membership plus the z->0 normalization, by sampling."""
    rep = VerificationReport(f"seiffert:{f.name}")
    z = zgrid(samples)
    with np.errstate(all="ignore"):
        v = f(z)
    lo = band_low(z)
    hi = band_high(z)
    scale = np.maximum(np.abs(v), np.maximum(lo, 1.0))

    low_margin = (v - lo) / scale
    k = int(np.argmin(low_margin))
    rep.add(
        CheckRecord(
            "band_lower",
            bool(low_margin[k] >= -TOL_REL),
            float(low_margin[k]),
            float(z[k]),
        )
    )
    hi_margin = (hi - v) / np.maximum(hi, scale)
    k = int(np.argmin(hi_margin))
    rep.add(
        CheckRecord(
            "band_upper",
            bool(hi_margin[k] >= -TOL_REL),
            float(hi_margin[k]),
            float(z[k]),
        )
    )
    if f.strict:
        m = float(np.min(low_margin)), float(np.min(hi_margin))
        rep.add(
            CheckRecord(
                "band_strict",
                m[0] > 0 and m[1] > 0,
                min(m),
                float(z[int(np.argmin(np.minimum(low_margin, hi_margin)))]),
            )
        )
    z0 = 1e-6
    ratio = f(z0) / z0
    rep.add(CheckRecord("limit_ratio_at_zero", abs(ratio - 1.0) < 1e-3, 1e-3 - abs(ratio - 1.0), z0))
    return rep


def validate_mean(M: Mean, samples: int = 4096) -> VerificationReport:
    """Symmetry, homogeneity and betweenness on quasi-random pairs.

    Failures are reported, never raised; ratios x/y span [1e-4, 1e4].
    """
    rep = VerificationReport(f"mean:{M.name}")
    x, y = sample_pairs(samples)
    with np.errstate(all="ignore"):
        v = M(x, y)

        sym = np.abs(v - M(y, x)) / np.abs(v)
        k = int(np.argmax(sym))
        rep.add(
            CheckRecord(
                "symmetry", bool(sym[k] <= TOL_REL), TOL_REL - float(sym[k]), (x[k], y[k])
            )
        )

        worst_h, wit_h = -np.inf, None
        for lam in (1e-3, 1.0, 1e3):
            hom = np.abs(M(lam * x, lam * y) - lam * v) / (lam * np.abs(v))
            k = int(np.argmax(hom))
            if hom[k] > worst_h:
                worst_h, wit_h = float(hom[k]), (x[k], y[k], lam)
        rep.add(
            CheckRecord("homogeneity", worst_h <= TOL_REL, TOL_REL - worst_h, wit_h)
        )

        mn = np.minimum(x, y)
        mx = np.maximum(x, y)
        spread = mx - mn
        btw = np.minimum(v - mn, mx - v) / spread
        k = int(np.argmin(btw))
        rep.add(
            CheckRecord(
                "betweenness", bool(btw[k] >= -TOL_REL), float(btw[k]), (x[k], y[k])
            )
        )
        if M.strict:
            rep.add(
                CheckRecord(
                    "betweenness_strict", bool(btw[k] > 0), float(btw[k]), (x[k], y[k])
                )
            )
    return rep


def roundtrip_check(f: SeiffertFunction, M: Mean, grid: int = 1000) -> VerificationReport:
    """Both directions of the bijection, checked relatively on samples.

    The function-direction grid stops at 1 - 1/256: forming the pair
    (1+z, 1-z) rounds z at scale 2, and members that are steep at 1 (the
    inverse hyperbolic tangent, the band edges) amplify that half-ulp by
    their condition number, so closer to 1 the identity is not testable at
    1e-12 in doubles.  The mean-direction check is scale-aware and sweeps
    the full ratio range.
    """
    rep = VerificationReport(f"roundtrip:{f.name}/{M.name}")

    g = seiffert_from_mean(mean_from_seiffert(f, validate=False))
    z = np.linspace(EPS, 1.0 - 1.0 / 256.0, grid)
    fv = f(z)
    dev = np.abs(g(z) - fv) / np.maximum(np.abs(fv), 1.0)
    k = int(np.argmax(dev))
    rep.add(CheckRecord("f -> S_f -> f", bool(dev[k] <= 1e-12), 1e-12 - float(dev[k]), float(z[k])))

    back = mean_from_seiffert(seiffert_from_mean(M), validate=False)
    x, y = sample_pairs(grid)
    mv = M(x, y)
    dev2 = np.abs(back(x, y) - mv) / np.maximum(x, y)
    k = int(np.argmax(dev2))
    rep.add(
        CheckRecord("M -> f_M -> M", bool(dev2[k] <= 1e-12), 1e-12 - float(dev2[k]), (x[k], y[k]))
    )
    return rep


# ---------------------------------------------------------------------------
# built-in catalogs


def _sf(name, fn, head, strict=True):
    return SeiffertFunction(name, fn, series_head=head, strict=strict)


SEIFFERT_FUNCTIONS: dict[str, SeiffertFunction] = {
    "id": _sf("id", lambda z: z, (1.0,)),
    "min": _sf("min", lambda z: z / (1.0 - z), (1.0,) * 8, strict=False),
    "max": _sf("max", lambda z: z / (1.0 + z), tuple((-1.0) ** k for k in range(8)), strict=False),
    "sin": _sf("sin", np.sin, (1, 0, -1 / 6, 0, 1 / 120, 0, -1 / 5040, 0)),
    "tan": _sf("tan", np.tan, (1, 0, 1 / 3, 0, 2 / 15, 0, 17 / 315, 0)),
    "sinh": _sf("sinh", np.sinh, (1, 0, 1 / 6, 0, 1 / 120, 0, 1 / 5040, 0)),
    "tanh": _sf("tanh", np.tanh, (1, 0, -1 / 3, 0, 2 / 15, 0, -17 / 315, 0)),
    "arcsin": _sf("arcsin", np.arcsin, (1, 0, 1 / 6, 0, 3 / 40, 0, 5 / 112, 0)),
    "arctan": _sf("arctan", np.arctan, (1, 0, -1 / 3, 0, 1 / 5, 0, -1 / 7, 0)),
    "arsinh": _sf("arsinh", np.arcsinh, (1, 0, -1 / 6, 0, 3 / 40, 0, -5 / 112, 0)),
    "artanh": _sf("artanh", np.arctanh, (1, 0, 1 / 3, 0, 1 / 5, 0, 1 / 7, 0)),
    "log1p": _sf(
        "log1p", np.log1p, tuple((-1.0) ** k / (k + 1) for k in range(8))
    ),
}

# the f_min/f_max naming follows the means they represent: the *smaller*
# mean has the *larger* Seiffert function
assert SEIFFERT_FUNCTIONS["min"](0.5) == 1.0  # z/(1-z) at 0.5


def _logmean(x, y):
    s = x + y
    d = np.abs(x - y)
    with np.errstate(invalid="ignore", divide="ignore"):
        z = np.where(s > 0, d / s, 0.0)
        off = np.where(z > 0, d / (np.log(np.maximum(x, y)) - np.log(np.minimum(x, y))), x)
    return np.where(z < DIAG_CUT, 0.5 * s * np.where(d == 0, 2 * x / s, 1.0), off)


def gini(r: float, s: float) -> Mean:
    """Two-parameter sum-quotient mean ((x^r+y^r)/(x^s+y^s))^(1/(r-s)).

    r = s is the usual logarithmic-weight limit.  Evaluation normalizes by
    max(x, y) so large ratios do not overflow.
    """
    r, s = float(r), float(s)

    if r == s:

        def fn(x, y):
            m = np.maximum(x, y)
            u = np.minimum(x, y) / m
            with np.errstate(all="ignore"):
                ur = u**r
                w = np.where(u > 0, ur * np.log(u), 0.0)
            return m * np.exp(w / (1.0 + ur))

    else:

        def fn(x, y):
            m = np.maximum(x, y)
            u = np.minimum(x, y) / m
            with np.errstate(all="ignore"):
                num = 1.0 + u**r
                den = 1.0 + u**s
                return m * (num / den) ** (1.0 / (r - s))

    return Mean(
        f"gini({r:g},{s:g})",
        fn,
        strict=True,
        seiffert_series_head=(1.0, 0.0, (1.0 - r - s) / 2.0),
    )


def power_mean(a: float) -> Mean:
    """Classical power mean ((x^a+y^a)/2)^(1/a); a = 0 gives the geometric."""
    a = float(a)
    if a == 0.0:
        return Mean(
            "power(0)",
            lambda x, y: np.sqrt(x * y),
            strict=True,
            seiffert_series_head=(1.0, 0.0, 0.5, 0.0, 0.375),
        )

    def fn(x, y):
        m = np.maximum(x, y)
        u = np.minimum(x, y) / m
        with np.errstate(all="ignore"):
            return m * ((1.0 + u**a) / 2.0) ** (1.0 / a)

    return Mean(
        f"power({a:g})",
        fn,
        strict=True,
        seiffert_series_head=(1.0, 0.0, (1.0 - a) / 2.0),
    )


def _build_means() -> dict[str, Mean]:
    means: dict[str, Mean] = {
        "min": Mean("min", np.minimum, seiffert_series_head=(1.0,) * 8),
        "max": Mean(
            "max", np.maximum, seiffert_series_head=tuple((-1.0) ** k for k in range(8))
        ),
        "A": Mean("A", lambda x, y: 0.5 * (x + y), strict=True, seiffert_series_head=(1.0,)),
        "G": Mean(
            "G",
            lambda x, y: np.sqrt(x * y),
            strict=True,
            seiffert_series_head=(1, 0, 0.5, 0, 0.375),
        ),
        "H": Mean(
            "H",
            lambda x, y: 2.0 * x * y / (x + y),
            strict=True,
            seiffert_series_head=(1, 0, 1, 0, 1),
        ),
        "L": Mean(
            "L",
            _logmean,
            strict=True,
            seiffert_series_head=SEIFFERT_FUNCTIONS["artanh"].series_head,
        ),
        "C": Mean(
            "C",
            lambda x, y: (x * x + y * y) / (x + y),
            strict=True,
            seiffert_series_head=(1, 0, -1, 0, 1),
        ),
        "RMS": Mean(
            "RMS",
            lambda x, y: np.sqrt(0.5 * (x * x + y * y)),
            strict=True,
            seiffert_series_head=(1, 0, -0.5, 0, 0.375),
        ),
        "QH": Mean(
            "QH",
            lambda x, y: (x * x + x * y + y * y) / (x + np.sqrt(x * y) + y),
            strict=True,
            seiffert_series_head=(1, 0, -0.5, 0, 0.125),
        ),
    }
    # the two inverse-circular and the inverse-hyperbolic-sine means are
    # defined by their Seiffert forms
    for key, fname in (("P", "arcsin"), ("T", "arctan"), ("NS", "arsinh")):
        m = mean_from_seiffert(SEIFFERT_FUNCTIONS[fname], validate=False)
        means[key] = Mean(
            key, m._fn, strict=True, seiffert_series_head=m.seiffert_series_head
        )
    return means


MEANS: dict[str, Mean] = _build_means()


def _register_all() -> None:
    for f in SEIFFERT_FUNCTIONS.values():
        rep = validate_seiffert(f, samples=256)
        if not rep.passed:
            raise BandViolation(f.name, rep.worst.witness, rep.worst_margin)
    for m in MEANS.values():
        rep = validate_mean(m, samples=256)
        if not rep.passed:
            raise ValueError(f"catalog mean {m.name} failed validation: {rep.summary()}")


_register_all()
