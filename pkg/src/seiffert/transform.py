"""The log-averaging integral operator and its iterated function families.

I(f)(z) = integral of f(t)/t over (0, z).  Since f(t)/t -> 1 at 0 the
integrand extends continuously; membership in the Seiffert band is preserved
and iterating the operator from the eight trigonometric/hyperbolic seeds
produces towers of comparable means converging to the arithmetic mean.

Each (base, depth) member is built once: its divided difference f(t)/t is
stored as a piecewise Chebyshev representation and the next level is an
exact antiderivative plus one refit pass, so deep members cost one sweep
instead of nested quadrature per point.
"""

from __future__ import annotations

import threading
from typing import Optional

from .cheb import EPS, PiecewiseCheb, QuadratureError, graded_breaks
from .core import SEIFFERT_FUNCTIONS, SeiffertFunction, validate_seiffert

MAX_DEPTH = 6

# concave seeds sit below the identity and their means above A; convex the
# other way around
FAMILY_SHAPES = {
    "sin": "concave",
    "arsinh": "concave",
    "arctan": "concave",
    "tanh": "concave",
    "sinh": "convex",
    "arcsin": "convex",
    "tan": "convex",
    "artanh": "convex",
}
FAMILY_BASES = tuple(FAMILY_SHAPES)

_BREAKS = graded_breaks()
_cache: dict[tuple[str, int], SeiffertFunction] = {}
# population is synchronized (reentrant: deeper levels build shallower ones)
_cache_lock = threading.RLock()


class DepthLimitError(ValueError):
    pass


def _hat_representation(f: SeiffertFunction, tol: float) -> PiecewiseCheb:
    if isinstance(f.hat_rep, PiecewiseCheb):
        return f.hat_rep

    def hat(t):
        return f(t) / t

    return PiecewiseCheb.fit(hat, _BREAKS, tol=tol)


def _head_integrate(head: Optional[tuple]) -> Optional[tuple]:
    if head is None:
        return None
    return tuple(c / (k + 1) for k, c in enumerate(head))


def _sub_eps_integral(head: Optional[tuple]) -> float:
    """Contribution of (0, eps) where the integrand is its continuous
    extension: the limit value 1, refined by series data when present."""
    if head is None:
        return EPS
    total = 0.0
    for k, c in enumerate(head):  # head[k] multiplies t^(k+1), so hat gets t^k
        total += c * EPS ** (k + 1) / (k + 1)
    return total


def integral_transform(f: SeiffertFunction, tol: float = 1e-12) -> SeiffertFunction:
    """One application of the operator, evaluable anywhere in (0,1).

    Raises QuadratureError when the integrand defeats the adaptive panel
    fitting (pathological input).
    """
    fit_tol = tol / 4.0
    hat0 = _hat_representation(f, fit_tol)
    F = hat0.antiderivative()
    c0 = _sub_eps_integral(f.series_head)

    def new_hat(z):
        return (c0 + F(z)) / z

    rep = PiecewiseCheb.fit(new_hat, _BREAKS, tol=fit_tol)

    def fn(z):
        return z * rep(z)

    return SeiffertFunction(
        f"I({f.name})",
        fn,
        series_head=_head_integrate(f.series_head),
        strict=True,
        value_at_one=c0 + F.end_value,
        hat_rep=rep,
    )


def family_member(base: str, depth: int, max_depth: int = MAX_DEPTH) -> SeiffertFunction:
    """Memoized depth-fold transform of one of the eight seed functions."""
    if base not in FAMILY_SHAPES:
        raise KeyError(f"unknown family base {base!r} (expected one of {FAMILY_BASES})")
    if depth < 0 or depth > max_depth:
        raise DepthLimitError(f"depth {depth} outside [0, {max_depth}]")
    if depth == 0:
        return SEIFFERT_FUNCTIONS[base]
    key = (base, depth)
    if key not in _cache:
        with _cache_lock:
            if key in _cache:
                return _cache[key]
            prev = family_member(base, depth - 1, max_depth)
            # error accumulates across levels, so tighten per level
            member = integral_transform(prev, tol=1e-12 / 2**depth)
            member = SeiffertFunction(
                f"I^{depth}({base})" if depth > 1 else f"I({base})",
                member._fn,
                series_head=member.series_head,
                strict=True,
                value_at_one=member.value_at_one,
                hat_rep=member.hat_rep,
            )
            rep = validate_seiffert(member, samples=256)
            if not rep.passed:
                raise QuadratureError(
                    f"{member.name} failed band validation: {rep.summary()}"
                )
            _cache[key] = member
    return _cache[key]


def clear_cache() -> None:
    _cache.clear()
