"""Series admission rules, classification and the corollary corpus."""

import numpy as np
import pytest

from seiffert import (
    COROLLARY_FUNCTIONS,
    RULES,
    SeriesSpec,
    SeriesSpecError,
    build_series_seiffert,
    classify_series,
    validate_seiffert,
)
from seiffert.series import validate_spec


def test_cubic_accept_half():
    f = build_series_seiffert(SeriesSpec("cubic", coefficients=(0.5,)))
    assert f(0.5) == pytest.approx(0.5625, abs=1e-15)


@pytest.mark.parametrize("a", [0.5, -0.5])
def test_cubic_boundary_accepted(a):
    f = build_series_seiffert(SeriesSpec("cubic", coefficients=(a,)))
    assert validate_seiffert(f).passed


@pytest.mark.parametrize("a", [0.51, -0.51, 0.501, -0.501])
def test_cubic_out_of_gate_rejected(a):
    with pytest.raises(SeriesSpecError):
        build_series_seiffert(SeriesSpec("cubic", coefficients=(a,)))


def test_harmonic_rule_matches_log1p():
    spec = SeriesSpec("alternating_convex", rule=RULES["harmonic"], truncation=200)
    f = build_series_seiffert(spec)
    z = np.linspace(1e-6, 0.85, 300)  # stay where the 200-term tail is tiny
    assert np.max(np.abs(f(z) - np.log1p(z))) < 1e-13


def test_classify_harmonic_is_alternating_convex():
    coeffs = [1.0 / n for n in range(1, 21)]
    # oracle: check the convexity hypothesis 2 a_k <= a_(k-1) + a_(k+1) directly
    for k in range(1, 19):
        assert 2 * coeffs[k] <= coeffs[k - 1] + coeffs[k + 1]
    kind, reason = classify_series(coeffs)
    assert kind == "alternating_convex", reason


def test_classify_sine_magnitudes_odd_alternating():
    import math

    coeffs = [1.0 / math.factorial(2 * n + 1) for n in range(1, 6)]
    assert coeffs[0] == pytest.approx(1 / 6)
    kind, reason = classify_series(coeffs)
    assert kind == "odd_alternating", reason


def test_classify_rejects_large_second_coefficient():
    kind, reason = classify_series([1.0, 2.0, 0.0])
    assert kind is None
    assert "a_2" in reason


def test_classify_single_number_as_cubic():
    kind, _ = classify_series([0.25])
    assert kind == "cubic"
    kind, _ = classify_series([0.9])
    assert kind is None


def test_classify_general_fallback():
    kind, _ = classify_series([1.0, 0.9, 0.1])  # not convex-decreasing, fits general
    assert kind == "general"


def test_validate_spec_reports_first_offender():
    with pytest.raises(SeriesSpecError) as info:
        validate_spec(SeriesSpec("general", coefficients=(1.0, 0.5, 1.2)))
    assert info.value.index == 3


def test_rule_generated_general_series():
    f = build_series_seiffert(SeriesSpec("general", rule=RULES["exp"], truncation=30))
    z = np.linspace(1e-6, 0.9, 200)
    assert np.max(np.abs(f(z) - (np.exp(z) - 1))) < 1e-12


@pytest.mark.parametrize("name", sorted(COROLLARY_FUNCTIONS))
def test_corollary_functions_pass_band(name):
    rep = validate_seiffert(COROLLARY_FUNCTIONS[name], samples=2048)
    assert rep.passed, (name, rep.summary())


def test_corollary_hybrids_are_smooth_across_cutover():
    # the series and closed-form branches must agree where they hand over
    for name, f in COROLLARY_FUNCTIONS.items():
        lo, hi = f(0.25 - 1e-9), f(0.25 + 1e-9)
        assert abs(hi - lo) < 1e-8, name


def test_tail_bound_fields():
    spec = SeriesSpec("general", coefficients=(1.0,) + (1.0,) * 30)
    assert spec.tail_bound > 1  # rigorous but vacuous at 1 - eps
    assert spec.tail_at(0.5) < 1e-9
