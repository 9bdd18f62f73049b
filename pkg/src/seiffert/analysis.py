"""Mean comparison, Schur classification, inequality corpora, combinators.

Comparing means reduces to comparing their Seiffert representatives with the
order reversed: M <= N everywhere exactly when f_M >= f_N on (0,1).  Schur
convexity likewise reads off the representative: M is Schur-convex iff
f_M(z)/z decreases, Schur-concave iff it increases.

Strict grid inequalities are checked with a double-precision noise floor:
at points where the true gap sits below float cancellation (for example two
means whose representatives share series through z^3, a z^4-scale gap at
z = 1e-4 is ~1e-17) the sign is indeterminate in doubles, so such points
may not count as violations and are tallied separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import (
    Mean,
    SeiffertFunction,
    mean_from_seiffert,
    seiffert_from_mean,
    validate_seiffert,
)
from .report import CheckRecord, VerificationReport
from .sampling import EPS, interior_zgrid, zgrid
from .transform import family_member

_FLOOR = 64 * np.finfo(float).eps
# cached integral-family representations are built to ~1e-13/level; two of
# them can only be compared down to this resolution
_REP_FLOOR = 1e-12


class MeanOrderError(ValueError):
    """A combinator's ordering precondition failed on samples."""


# ---------------------------------------------------------------------------
# comparison


@dataclass(frozen=True)
class ComparisonVerdict:
    relation: str  # '<=', '>=', 'incomparable', 'indistinguishable'
    worst_margin: float
    witnesses: tuple  # z locations; two (opposite signs) when incomparable

    def __str__(self):
        return f"{self.relation} (margin {self.worst_margin:.6g} at {self.witnesses})"


def compare(M: Mean, N: Mean, grid_size: int = 2048, tol: float = 1e-13) -> ComparisonVerdict:
    """Order verdict via the representatives on a grid.

    diff = f_M - f_N decides: all positive (relatively, beyond tol) means
    M <= N, all negative means M >= N, both signs present means the means
    cross, everything inside tol means they are numerically identical.
    """
    fM = seiffert_from_mean(M)
    fN = seiffert_from_mean(N)
    z = zgrid(grid_size)
    vM = fM(z)
    vN = fN(z)
    rel = (vM - vN) / np.maximum(np.abs(vM), np.abs(vN))
    pos = rel > tol
    neg = rel < -tol
    if pos.any() and neg.any():
        kp = int(np.argmax(rel))
        kn = int(np.argmin(rel))
        margin = float(min(rel[kp], -rel[kn]))
        return ComparisonVerdict("incomparable", margin, (float(z[kn]), float(z[kp])))
    if pos.any():
        k = int(np.argmin(rel))
        return ComparisonVerdict("<=", float(rel[k]), (float(z[k]),))
    if neg.any():
        k = int(np.argmax(rel))
        return ComparisonVerdict(">=", float(-rel[k]), (float(z[k]),))
    k = int(np.argmax(np.abs(rel)))
    return ComparisonVerdict("indistinguishable", float(np.abs(rel[k])), (float(z[k]),))


# ---------------------------------------------------------------------------
# Schur convexity


@dataclass(frozen=True)
class SchurVerdict:
    classification: str  # 'schur_convex', 'schur_concave', 'affine', 'neither'
    strict: bool
    worst_monotonicity_defect: float

    def __str__(self):
        s = " (strict)" if self.strict else ""
        return f"{self.classification}{s}, defect {self.worst_monotonicity_defect:.3g}"


def schur_classify(M: Mean, grid_size: int = 2048, tol: float = 1e-12) -> SchurVerdict:
    """Monotonicity of f_M(z)/z via consecutive grid differences.

    Decreasing divided difference = Schur-convex, increasing = Schur-concave.
    A flat profile (the arithmetic mean) is reported as 'affine': it is the
    boundary case satisfying both non-strictly.
    """
    f = seiffert_from_mean(M)
    z = zgrid(grid_size)
    h = f(z) / z
    d = np.diff(h) / np.max(np.abs(h))
    if np.all(np.abs(d) <= tol):
        return SchurVerdict("affine", False, float(np.max(np.abs(d))))
    if np.all(d <= tol):
        strict = bool(np.all(d < 0))
        return SchurVerdict("schur_convex", strict, float(max(np.max(d), 0.0)))
    if np.all(d >= -tol):
        strict = bool(np.all(d > 0))
        return SchurVerdict("schur_concave", strict, float(max(-np.min(d), 0.0)))
    return SchurVerdict(
        "neither", False, float(min(np.max(d), -np.min(d)))
    )


# ---------------------------------------------------------------------------
# inequality corpora


def _strict_check(
    rep: VerificationReport,
    name: str,
    lhs: np.ndarray,
    rhs: np.ndarray,
    xs: np.ndarray,
    floor_rel: float = _FLOOR,
) -> None:
    """Require lhs > rhs at determinate points, tolerate sub-floor ties.

    The default floor is 64 ulp of the local magnitude; |lhs-rhs| below it
    cannot be signed reliably in doubles and counts as indeterminate, not
    violation.  Checks on quadrature-built functions pass the build
    tolerance instead, since their evaluations only agree to that level.
    """
    diff = lhs - rhs
    floor = floor_rel * np.maximum(np.maximum(np.abs(lhs), np.abs(rhs)), 1e-300)
    viol = diff < -floor
    det = diff > floor
    indet = int(np.sum(~viol & ~det))
    if viol.any():
        k = int(np.argmin(diff / floor))
        rep.add(CheckRecord(name, False, float(diff[k]), float(xs[k]), indeterminate=indet))
        return
    if det.any():
        dm = np.where(det, diff, np.inf)
        k = int(np.argmin(dm))
        rep.add(CheckRecord(name, True, float(diff[k]), float(xs[k]), indeterminate=indet))
    else:
        rep.add(CheckRecord(name, True, 0.0, None, detail="all points sub-floor", indeterminate=indet))


def _family_mean_value(base: str, depth: int, z: np.ndarray) -> np.ndarray:
    # mean at the normalized pair (1+z, 1-z); A normalizes to 1
    return 1.0 / family_member(base, depth).hat(z)


def _corpus_lemma3(points: int) -> VerificationReport:
    rep = VerificationReport("corpus:lemma3")
    t = 10.0 * interior_zgrid(points)
    _strict_check(rep, "t > arsinh t on (0,10)", t, np.arcsinh(t), t)
    _strict_check(rep, "arsinh t > arctan t on (0,10)", np.arcsinh(t), np.arctan(t), t)
    _strict_check(rep, "arctan t > tanh t on (0,10)", np.arctan(t), np.tanh(t), t)
    _strict_check(rep, "tanh t > t/(1+t) on (0,10)", np.tanh(t), t / (1 + t), t)
    s = (np.pi / 2) * interior_zgrid(points)
    _strict_check(rep, "arsinh t > sin t on (0,pi/2)", np.arcsinh(s), np.sin(s), s)
    u = interior_zgrid(points)
    _strict_check(rep, "sin t > arctan t on (0,1)", np.sin(u), np.arctan(u), u)
    return rep


def _corpus_lemma4(points: int) -> VerificationReport:
    rep = VerificationReport("corpus:lemma4")
    t = interior_zgrid(points)
    _strict_check(rep, "sinh t > t", np.sinh(t), t, t)
    _strict_check(rep, "tan t > sinh t", np.tan(t), np.sinh(t), t)
    _strict_check(rep, "artanh t > tan t", np.arctanh(t), np.tan(t), t)
    _strict_check(rep, "t/(1-t) > artanh t", t / (1 - t), np.arctanh(t), t)
    _strict_check(rep, "arcsin t > sinh t", np.arcsin(t), np.sinh(t), t)
    _strict_check(rep, "artanh t > arcsin t", np.arctanh(t), np.arcsin(t), t)
    # arcsin and tan cross inside (0,1): need witnesses on both sides
    tt = np.append(t, 1.0 - EPS)
    q = np.arcsin(tt) - np.tan(tt)
    floor = _FLOOR * np.abs(np.tan(tt))
    has_neg = bool(np.any(q < -floor))
    has_pos = bool(np.any(q > floor))
    wn = float(tt[int(np.argmin(q))])
    wp = float(tt[int(np.argmax(q))])
    rep.add(
        CheckRecord(
            "arcsin/tan incomparable on (0,1)",
            has_neg and has_pos,
            float(min(np.max(q), -np.min(q))),
            (wn, wp),
        )
    )
    return rep


def _corpus_lemma5(points: int) -> VerificationReport:
    rep = VerificationReport("corpus:lemma5")
    t = np.append(interior_zgrid(points), 1.0 - EPS)
    q = np.arcsin(t) - np.tan(t)
    floor = _FLOOR * np.abs(np.tan(t))
    signs = np.sign(q[np.abs(q) > floor])
    changes = int(np.sum(signs[1:] != signs[:-1]))
    rep.add(
        CheckRecord(
            "arcsin - tan changes sign exactly once",
            changes == 1,
            float(changes),
            None,
            detail=f"{changes} sign changes on {len(t)} points",
        )
    )
    z = interior_zgrid(points)
    h_asi = family_member("arcsin", 1).hat(z)
    h_ti = family_member("tan", 1).hat(z)
    # f-order reversed: the once-integrated arcsin stays below the
    # once-integrated tan, so its mean stays above
    _strict_check(rep, "I(arcsin) < I(tan) pointwise", h_ti, h_asi, z, floor_rel=_REP_FLOOR)
    u1 = family_member("arcsin", 1).value_at_one - family_member("tan", 1).value_at_one
    rep.add(
        CheckRecord(
            "I(arcsin)(1) - I(tan)(1) < 0",
            u1 < 0,
            float(-u1),
            1.0,
            detail=f"value {u1:.9f}",
        )
    )
    return rep


_ABOVE_ROWS = ("arsinh", "sin", "arctan", "tanh")  # concave seeds, means above A
_BELOW_ROWS = ("sinh", "arcsin", "tan", "artanh")  # convex seeds, means below A


def _corpus_grid_above(points: int, max_depth: int = 3) -> VerificationReport:
    rep = VerificationReport("corpus:grid_above_A")
    z = interior_zgrid(points)
    vals = {
        (b, n): _family_mean_value(b, n, z)
        for b in _ABOVE_ROWS
        for n in range(max_depth + 1)
    }
    for n in range(max_depth + 1):
        for hi_row, lo_row in zip(_ABOVE_ROWS[1:], _ABOVE_ROWS[:-1]):
            _strict_check(
                rep,
                f"depth {n}: {lo_row}-mean < {hi_row}-mean",
                vals[(hi_row, n)],
                vals[(lo_row, n)],
                z,
                floor_rel=_REP_FLOOR,
            )
    for b in _ABOVE_ROWS:
        for n in range(max_depth):
            _strict_check(
                rep,
                f"{b}: depth {n + 1} mean < depth {n} mean",
                vals[(b, n)],
                vals[(b, n + 1)],
                z,
                floor_rel=_REP_FLOOR,
            )
        _strict_check(
            rep,
            f"A < deepest {b} mean",
            vals[(b, max_depth)],
            np.ones_like(z),
            z,
            floor_rel=_REP_FLOOR,
        )
    return rep


def _corpus_grid_below(points: int, max_depth: int = 3) -> VerificationReport:
    rep = VerificationReport("corpus:grid_below_A")
    z = interior_zgrid(points)
    vals = {
        (b, n): _family_mean_value(b, n, z)
        for b in _BELOW_ROWS
        for n in range(max_depth + 1)
    }
    for n in range(max_depth + 1):
        for top, bot in zip(_BELOW_ROWS[:-1], _BELOW_ROWS[1:]):
            if n == 0 and {top, bot} == {"arcsin", "tan"}:
                continue  # not comparable before one integration pass
            _strict_check(
                rep,
                f"depth {n}: {top}-mean > {bot}-mean",
                vals[(top, n)],
                vals[(bot, n)],
                z,
                floor_rel=_REP_FLOOR,
            )
    _strict_check(
        rep,
        "depth 0: arcsin-mean > artanh-mean",
        vals[("arcsin", 0)],
        vals[("artanh", 0)],
        z,
        floor_rel=_REP_FLOOR,
    )
    for b in _BELOW_ROWS:
        for n in range(max_depth):
            _strict_check(
                rep,
                f"{b}: depth {n} mean < depth {n + 1} mean",
                vals[(b, n + 1)],
                vals[(b, n)],
                z,
                floor_rel=_REP_FLOOR,
            )
        _strict_check(
            rep,
            f"deepest {b} mean < A",
            np.ones_like(z),
            vals[(b, max_depth)],
            z,
            floor_rel=_REP_FLOOR,
        )
    return rep


def _corpus_sin_bound(points: int) -> VerificationReport:
    rep = VerificationReport("corpus:sin_bound")
    z = interior_zgrid(points)
    sin_mean = z / np.sin(z)  # at the pair (1+z, 1-z), where A = 1
    upper = 6.0 / (6.0 - z * z)  # A * 6A^2/(5A^2 + G^2) there
    _strict_check(rep, "A < sin-mean", sin_mean, np.ones_like(z), z)
    _strict_check(rep, "sin-mean < 6A^3/(5A^2+G^2)", upper, sin_mean, z)
    return rep


_CORPORA: dict[str, Callable[[int], VerificationReport]] = {
    "lemma3": _corpus_lemma3,
    "lemma4": _corpus_lemma4,
    "lemma5": _corpus_lemma5,
    "grid_above_A": _corpus_grid_above,
    "grid_below_A": _corpus_grid_below,
    "sin_bound": _corpus_sin_bound,
}

CORPUS_NAMES = tuple(_CORPORA)


def verify_corpus(corpus_name: str, points: int = 10000) -> VerificationReport:
    if corpus_name not in _CORPORA:
        raise KeyError(f"unknown corpus {corpus_name!r}; expected one of {CORPUS_NAMES}")
    return _CORPORA[corpus_name](points)


# ---------------------------------------------------------------------------
# combinators


def _require_below_A(M: Mean) -> None:
    from .core import MEANS

    verdict = compare(M, MEANS["A"], grid_size=512)
    if verdict.relation not in ("<=", "indistinguishable"):
        raise MeanOrderError(
            f"{M.name} is not <= A on samples (verdict {verdict.relation}, witness {verdict.witnesses})"
        )


def combine_half_square(M: Mean) -> Mean:
    """The mean whose representative is 4 f(z/2)^2 / z.

    Requires M <= A.  The result is the square of the half-shifted mean
    divided by the arithmetic mean, which stays a mean even though M^2/A
    itself generally does not.
    """
    _require_below_A(M)
    f = seiffert_from_mean(M)

    def g(z):
        w = f(0.5 * np.asarray(z, dtype=float))
        return 4.0 * w * w / z

    head = None
    if M.seiffert_series_head is not None and len(M.seiffert_series_head) >= 3:
        c = M.seiffert_series_head
        if c[1] == 0:
            head = (1.0, 0.0, c[2] / 2.0)
    gf = SeiffertFunction(
        f"halfsq_rep({M.name})",
        g,
        series_head=head,
        strict=M.strict,
        value_at_one=4.0 * f(0.5) ** 2,
    )
    out = mean_from_seiffert(gf)
    return Mean(f"halfsq({M.name})", out._fn, strict=M.strict, seiffert_series_head=head)


def combine_power(M: Mean, t: float) -> Mean:
    """Geometric interpolation M_t^(1/t) A^(1-1/t) via z * (f(tz)/(tz))^(1/t).

    Requires M <= A and 0 < t < 1; t = 1/2 reproduces combine_half_square.
    """
    if not 0.0 < t < 1.0:
        raise ValueError(f"t={t:g} outside (0,1)")
    _require_below_A(M)
    f = seiffert_from_mean(M)

    def g(z):
        z = np.asarray(z, dtype=float)
        w = t * z
        return z * (f(w) / w) ** (1.0 / t)

    head = None
    if M.seiffert_series_head is not None and len(M.seiffert_series_head) >= 3:
        c = M.seiffert_series_head
        if c[1] == 0:
            head = (1.0, 0.0, c[2] * t)
    gf = SeiffertFunction(
        f"powcomb_rep({M.name},{t:g})",
        g,
        series_head=head,
        strict=M.strict,
        value_at_one=(f(t) / t) ** (1.0 / t),
    )
    out = mean_from_seiffert(gf)
    return Mean(
        f"powcomb({M.name},{t:g})", out._fn, strict=M.strict, seiffert_series_head=head
    )


def harmonic_weighted_dual(
    f: SeiffertFunction,
    g: SeiffertFunction,
    K: Callable[[np.ndarray, np.ndarray], np.ndarray],
    name: str = "K",
) -> SeiffertFunction:
    """Combine representatives pointwise by a homogeneous (not necessarily
    symmetric) two-variable mean K; the induced mean is M N / K(N, M).

    Band membership of the result is sampled; violations raise.
    """

    def h(z):
        return K(f(z), g(z))

    hf = SeiffertFunction(f"{name}({f.name},{g.name})", h, strict=False)
    rep = validate_seiffert(hf, samples=512)
    if not rep.passed:
        from .core import BandViolation

        w = rep.worst
        raise BandViolation(hf.name, w.witness, w.margin)
    return hf
