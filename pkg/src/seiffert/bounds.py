"""Optimal-constant solvers for sandwiching one mean between two others.

Convex-combination bounds: for K < M < N the best weights mu, nu with
(1-mu) K + mu N <= M <= (1-nu) K + nu N are the inf and sup over (0,1) of

    R(z) = (1/f_M - 1/f_K) / (1/f_N - 1/f_K).

Shifted-argument bounds: with m-hat = f_M(z)/z and n-hat strictly monotone,
the optimal contraction factors for N pinched around M are the inf and sup
of Q(z) = n-hat^(-1)(m-hat(z)) / z.

Both objectives are 0/0 at z -> 0; the limit comes from series data when
all participants carry it (catalog members do), else from Richardson
extrapolation.  The z -> 1 limits use the stored f(1) values, which is what
makes constants like 1/(2 sin 1) come out at closed-form accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .analysis import MeanOrderError, compare
from .core import MEANS, Mean, SeiffertFunction, seiffert_from_mean
from .report import CheckRecord, VerificationReport
from .sampling import EPS, Z_SAFE, safe_zgrid, sample_pairs, zgrid
from .search import scan_and_refine

_TINY = 1e-14


@dataclass(frozen=True)
class BoundResult:
    """Computed pair of optimal constants with extremizer diagnostics.

    lower_constant is mu (weight case) or p0 (shift case); extremizers are z
    locations, with the endpoint fields set to 'zero-limit'/'one-limit' when
    the optimum is attained only in the corresponding limit.  monotone
    records the fast path; hat_direction (shift case) records which
    monotonicity the inverted hat function exhibited.
    """

    lower_constant: float
    upper_constant: float
    lower_extremizer: Optional[float]
    upper_extremizer: Optional[float]
    lower_endpoint: Optional[str] = None
    upper_endpoint: Optional[str] = None
    monotone: Optional[str] = None
    hat_direction: Optional[str] = None
    objective_trace: Optional[np.ndarray] = None


def _inverse_unit_series(head, nterms: int) -> np.ndarray:
    """Coefficients b of 1/(1 + a1 z + a2 z^2 + ...) where a_k = head[k]."""
    a = np.zeros(nterms)
    for k in range(1, min(nterms, len(head))):
        a[k] = head[k]
    b = np.zeros(nterms)
    b[0] = 1.0
    for k in range(1, nterms):
        b[k] = -np.dot(a[1 : k + 1], b[k - 1 :: -1][: k])
    return b


def _ratio_limit_zero(fK, fM, fN) -> Optional[float]:
    heads = (fK.series_head, fM.series_head, fN.series_head)
    if any(h is None or len(h) < 2 or abs(h[0] - 1.0) > 1e-9 for h in heads):
        return None
    n = min(len(h) for h in heads)
    bK = _inverse_unit_series(heads[0], n)
    bM = _inverse_unit_series(heads[1], n)
    bN = _inverse_unit_series(heads[2], n)
    num = bM - bK  # (1/f_M - 1/f_K) * z = sum (bM_k - bK_k) z^k
    den = bN - bK
    for k in range(1, n):
        nk, dk = num[k], den[k]
        if abs(dk) > _TINY:
            return float(nk / dk) if abs(nk) > _TINY else 0.0
        if abs(nk) > _TINY:
            return None  # numerator dominates: no finite limit from series
    return None


def _richardson(fn, zs=(1e-4, 1e-5, 1e-6)) -> float:
    v = [float(fn(z)) for z in zs]
    d1, d2 = v[0] - v[1], v[1] - v[2]
    if not np.isfinite(v[2]):
        return v[1]
    if abs(d2) < 1e-300 or not np.isfinite(d1 / d2) or d1 / d2 <= 1.0:
        return v[2]
    r = d1 / d2
    return v[2] - d2 / (r - 1.0)


def _inv_at_one(f: SeiffertFunction) -> Optional[float]:
    v = f.value_at_one
    if v is None:
        return None
    return 0.0 if np.isinf(v) else 1.0 / v


def convex_combination_bounds(
    K: Mean,
    M: Mean,
    N: Mean,
    grid: int = 4096,
    xtol: float = 1e-9,
    trace: bool = False,
) -> BoundResult:
    """Optimal weights placing M between K and N (weights sit on N).

    Preconditions K < M < N are verified on a grid first.  When the
    objective is monotone on the grid the constants are taken directly from
    the two endpoint limits.
    """
    for a, b, label in ((K, M, "K < M"), (M, N, "M < N")):
        verdict = compare(a, b)
        if verdict.relation != "<=":
            raise MeanOrderError(f"{label} failed: got {verdict}")

    fK = seiffert_from_mean(K)
    fM = seiffert_from_mean(M)
    fN = seiffert_from_mean(N)

    def R(z):
        z = np.asarray(z, dtype=float)
        with np.errstate(all="ignore"):
            iK = 1.0 / fK(z)
            return (1.0 / fM(z) - iK) / (1.0 / fN(z) - iK)

    z = safe_zgrid(grid)
    vals = R(z)
    if not np.all(np.isfinite(vals)):
        k = int(np.argmax(~np.isfinite(vals)))
        raise ZeroDivisionError(
            f"objective undefined at z={z[k]:.6g} (f_N and f_K coincide there?)"
        )

    lim0 = _ratio_limit_zero(fK, fM, fN)
    if lim0 is None:
        lim0 = _richardson(lambda t: R(np.asarray([t]))[0])
    iK1, iM1, iN1 = _inv_at_one(fK), _inv_at_one(fM), _inv_at_one(fN)
    if None not in (iK1, iM1, iN1) and abs(iN1 - iK1) > _TINY:
        lim1 = (iM1 - iK1) / (iN1 - iK1)
    else:
        lim1 = float(vals[-1])

    d = np.diff(vals)
    span = max(float(np.max(vals) - np.min(vals)), 1e-30)
    if np.all(d >= -1e-9 * span):
        monotone = "increasing"
    elif np.all(d <= 1e-9 * span):
        monotone = "decreasing"
    else:
        monotone = None

    candidates = [(lim0, None, "zero-limit"), (lim1, None, "one-limit")]
    if monotone is None:
        x_hi, v_hi, end_hi = scan_and_refine(R, Z_SAFE, 1.0 - EPS, n=grid, xtol=xtol)
        x_lo, v_lo, end_lo = scan_and_refine(
            lambda t: -R(t), Z_SAFE, 1.0 - EPS, n=grid, xtol=xtol
        )
        candidates.append((float(v_hi), float(x_hi), end_hi))
        candidates.append((float(-v_lo), float(x_lo), end_lo))

    best_hi = max(candidates, key=lambda c: c[0])
    best_lo = min(candidates, key=lambda c: c[0])
    return BoundResult(
        lower_constant=best_lo[0],
        upper_constant=best_hi[0],
        lower_extremizer=best_lo[1],
        upper_extremizer=best_hi[1],
        lower_endpoint=best_lo[2] if isinstance(best_lo[2], str) else None,
        upper_endpoint=best_hi[2] if isinstance(best_hi[2], str) else None,
        monotone=monotone,
        objective_trace=np.column_stack([z, vals]) if trace else None,
    )


# ---------------------------------------------------------------------------
# shifted-argument bounds


def _hat_profile(n_fun: SeiffertFunction, grid: int = 512):
    z = zgrid(grid)
    h = n_fun.hat(z)
    d = np.diff(h)
    scale = float(np.max(np.abs(h)))
    if np.all(np.abs(d) <= 1e-13 * scale):
        raise ValueError(f"{n_fun.name}: divided difference is constant, not invertible")
    if np.all(d <= 1e-13 * scale):
        return "decreasing", z, h
    if np.all(d >= -1e-13 * scale):
        return "increasing", z, h
    raise ValueError(f"{n_fun.name}: divided difference is not monotone on the grid")


def hat_inverse(n: SeiffertFunction, y: float, xtol: float = 1e-13) -> float:
    """Solve n(z)/z = y by bisection; 0 and 1 answer boundary targets.

    The divided difference always tends to 1 at 0; its z -> 1 limit comes
    from the stored f(1) when available.
    """
    direction, _, h = _hat_profile(n)
    increasing = direction == "increasing"
    h1 = n.value_at_one
    if h1 is None:
        h1 = float(h[-1])
    at_zero_side = (y <= 1.0) if increasing else (y >= 1.0)
    if at_zero_side:
        return 0.0
    at_one_side = (y >= h1) if increasing else (y <= h1)
    if at_one_side:
        return 1.0

    def fz(z):
        return float(n.hat(z))

    from .search import invert_monotone

    return invert_monotone(fz, y, EPS, 1.0 - EPS, increasing, xtol=xtol)


def _vector_hat_inverse(n_fun: SeiffertFunction, ys: np.ndarray, increasing: bool, iters: int = 48):
    lo = np.full_like(ys, EPS)
    hi = np.full_like(ys, 1.0 - EPS)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        below = n_fun.hat(mid) < ys
        take_lo = below == increasing
        lo = np.where(take_lo, mid, lo)
        hi = np.where(take_lo, hi, mid)
    return 0.5 * (lo + hi)


def _hat_leading(head) -> Optional[tuple[int, float]]:
    if head is None or len(head) < 2 or abs(head[0] - 1.0) > 1e-9:
        return None
    for k in range(1, len(head)):
        if abs(head[k]) > _TINY:
            return k, float(head[k])
    return None


def shift_bounds(M: Mean, N: Mean, grid: int = 2048, xtol: float = 1e-9, trace: bool = False) -> BoundResult:
    """Optimal midpoint-contraction factors pinching M between shifts of N.

    Either A < M < N (then N_p <= M <= N_q iff p <= p0, q >= q0) or
    N < M < A (then the roles of p and q swap sides).  The returned
    lower/upper constants are always p0 = inf Q and q0 = sup Q.
    """
    A = MEANS["A"]
    vAM = compare(A, M)
    vMN = compare(M, N)
    if vAM.relation == "<=" and vMN.relation == "<=":
        case = "above_A"
    elif vAM.relation == ">=" and vMN.relation == ">=":
        case = "below_A"
    else:
        raise MeanOrderError(
            f"need A < M < N or N < M < A; got A?M {vAM.relation}, M?N {vMN.relation}"
        )

    m = seiffert_from_mean(M)
    n = seiffert_from_mean(N)
    direction, _, h_grid = _hat_profile(n)
    increasing = direction == "increasing"

    z = safe_zgrid(grid)
    q_vals = _vector_hat_inverse(n, m.hat(z), increasing) / z

    lm = _hat_leading(m.series_head)
    ln = _hat_leading(n.series_head)
    lim0 = None
    if lm is not None and ln is not None:
        (jm, am), (jn, an) = lm, ln
        if jm == jn and am / an > 0:
            lim0 = float((am / an) ** (1.0 / jm))
        elif jm > jn:
            lim0 = 0.0
    if lim0 is None:
        lim0 = _richardson(
            lambda t: hat_inverse(n, float(m.hat(t))) / t, zs=(1e-2, 3e-3, 1e-3)
        )

    y1 = m.value_at_one
    if y1 is not None:
        lim1 = hat_inverse(n, y1)
    else:
        lim1 = float(q_vals[-1])

    d = np.diff(q_vals)
    span = max(float(np.max(q_vals) - np.min(q_vals)), 1e-30)
    if np.all(d >= -1e-9 * span):
        monotone = "increasing"
    elif np.all(d <= 1e-9 * span):
        monotone = "decreasing"
    else:
        monotone = None

    candidates = [(lim0, None, "zero-limit"), (lim1, None, "one-limit")]
    if monotone is None:

        def Q(t):
            t = np.asarray(t, dtype=float)
            return _vector_hat_inverse(n, m.hat(t), increasing) / t

        x_hi, v_hi, end_hi = scan_and_refine(Q, Z_SAFE, 1.0 - EPS, n=grid, xtol=xtol)
        x_lo, v_lo, end_lo = scan_and_refine(lambda t: -Q(t), Z_SAFE, 1.0 - EPS, n=grid, xtol=xtol)
        candidates.append((float(v_hi), float(x_hi), end_hi))
        candidates.append((float(-v_lo), float(x_lo), end_lo))

    best_hi = max(candidates, key=lambda c: c[0])
    best_lo = min(candidates, key=lambda c: c[0])
    return BoundResult(
        lower_constant=best_lo[0],
        upper_constant=best_hi[0],
        lower_extremizer=best_lo[1],
        upper_extremizer=best_hi[1],
        lower_endpoint=best_lo[2] if isinstance(best_lo[2], str) else None,
        upper_endpoint=best_hi[2] if isinstance(best_hi[2], str) else None,
        monotone=monotone,
        hat_direction=direction,
        objective_trace=np.column_stack([z, q_vals]) if trace else None,
    )


# ---------------------------------------------------------------------------
# soundness checks used by the CLI and the test suite


def check_convex_soundness(
    K: Mean, M: Mean, N: Mean, result: BoundResult, samples: int = 10000, slack: float = 1e-9
) -> VerificationReport:
    rep = VerificationReport(f"convex bounds {K.name},{M.name},{N.name}")
    x, y = sample_pairs(samples)
    mu, nu = result.lower_constant, result.upper_constant
    mv = M(x, y)
    kv = K(x, y)
    nv = N(x, y)
    scale = np.maximum(x, y)
    low = (mv - ((1 - mu) * kv + mu * nv)) / scale
    k = int(np.argmin(low))
    rep.add(CheckRecord("(1-mu)K + mu N <= M", bool(low[k] >= -slack), float(low[k]), (x[k], y[k])))
    high = (((1 - nu) * kv + nu * nv) - mv) / scale
    k = int(np.argmin(high))
    rep.add(CheckRecord("M <= (1-nu)K + nu N", bool(high[k] >= -slack), float(high[k]), (x[k], y[k])))
    return rep


def check_shift_soundness(
    M: Mean, N: Mean, result: BoundResult, samples: int = 10000, slack: float = 1e-9
) -> VerificationReport:
    from .algebra import shift_mean

    rep = VerificationReport(f"shift bounds {M.name} vs {N.name}")
    x, y = sample_pairs(samples)
    mv = M(x, y)
    scale = np.maximum(x, y)
    p0, q0 = result.lower_constant, result.upper_constant
    A = MEANS["A"]
    above = compare(A, M).relation == "<="
    # above A: N_p0 <= M <= N_q0 ; below A: N_q0 <= M <= N_p0
    lower_t, upper_t = (p0, q0) if above else (q0, p0)
    for t, side in ((lower_t, "lower"), (upper_t, "upper")):
        if not 0.0 < t <= 1.0:
            rep.add(CheckRecord(f"{side} shift t={t:g}", True, 0.0, None, detail="trivial (no shift)"))
            continue
        nt = shift_mean(N, t)(x, y)
        marg = (mv - nt) / scale if side == "lower" else (nt - mv) / scale
        k = int(np.argmin(marg))
        rep.add(
            CheckRecord(
                f"{side}: shift({N.name},{t:.12g}) vs {M.name}",
                bool(marg[k] >= -slack),
                float(marg[k]),
                (x[k], y[k]),
            )
        )
    return rep
