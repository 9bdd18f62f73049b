"""Optimal-constant solvers against elementary closed forms."""

import math

import numpy as np
import pytest

from seiffert import (
    MEANS,
    SEIFFERT_FUNCTIONS,
    MeanOrderError,
    check_convex_soundness,
    check_shift_soundness,
    convex_combination_bounds,
    gini,
    hat_inverse,
    mean_from_seiffert,
    power_mean,
    seiffert_from_mean,
    shift_bounds,
)
from seiffert.sampling import sample_pairs

MIN, MAX, A = MEANS["min"], MEANS["max"], MEANS["A"]

# (seed function, which constant is pinned, elementary closed form)
EIGHT_CASES = [
    ("sin", "upper", 1 / (2 * math.sin(1))),
    ("arcsin", "lower", 1 / math.pi),
    ("tan", "lower", 1 / (2 * math.tan(1))),
    ("arctan", "upper", 2 / math.pi),
    ("tanh", "upper", 1 / (2 * math.tanh(1))),
    ("sinh", "lower", 1 / (2 * math.sinh(1))),
    ("arsinh", "upper", 1 / (2 * math.asinh(1))),
    ("artanh", "lower", 0.0),
]


@pytest.mark.parametrize("base,side,expect", EIGHT_CASES)
def test_min_max_weights_reproduce_closed_forms(base, side, expect):
    M = mean_from_seiffert(SEIFFERT_FUNCTIONS[base])
    r = convex_combination_bounds(MIN, M, MAX)
    got = r.lower_constant if side == "lower" else r.upper_constant
    assert got == pytest.approx(expect, abs=1e-9)
    other = r.upper_constant if side == "lower" else r.lower_constant
    assert other == pytest.approx(0.5, abs=1e-9)  # the arithmetic-mean side
    assert r.monotone in ("increasing", "decreasing")


@pytest.mark.parametrize("base,side,expect", EIGHT_CASES)
def test_min_max_weights_soundness(base, side, expect):
    M = mean_from_seiffert(SEIFFERT_FUNCTIONS[base])
    r = convex_combination_bounds(MIN, M, MAX)
    rep = check_convex_soundness(MIN, M, MAX, r, samples=4000)
    assert rep.passed, rep.summary()


def test_tightened_constants_violate():
    M = mean_from_seiffert(SEIFFERT_FUNCTIONS["sin"])
    r = convex_combination_bounds(MIN, M, MAX)
    x, y = sample_pairs(10000)
    mu = r.lower_constant + 1e-3
    low = M(x, y) - ((1 - mu) * MIN(x, y) + mu * MAX(x, y))
    assert np.min(low / np.maximum(x, y)) < -1e-9  # raised weight overshoots
    nu = r.upper_constant - 1e-3
    high = ((1 - nu) * MIN(x, y) + nu * MAX(x, y)) - M(x, y)
    assert np.min(high / np.maximum(x, y)) < -1e-9


def test_objective_range_inside_unit_interval():
    M = MEANS["P"]
    r = convex_combination_bounds(MIN, M, MAX, trace=True)
    vals = r.objective_trace[:, 1]
    assert np.all(vals > 0) and np.all(vals < 1)
    assert 0 < r.lower_constant < r.upper_constant < 1


def test_general_triple():
    # H < G < A with weights on A
    r = convex_combination_bounds(MEANS["H"], MEANS["G"], MEANS["A"])
    rep = check_convex_soundness(MEANS["H"], MEANS["G"], MEANS["A"], r, samples=4000)
    assert rep.passed
    assert r.lower_constant <= r.upper_constant


def test_precondition_rejects_unordered():
    with pytest.raises(MeanOrderError):
        convex_combination_bounds(MEANS["A"], MEANS["G"], MEANS["C"])  # A > G


# ---------------------------------------------------------------------------
# hat inversion


def test_hat_inverse_contraharmonic():
    fC = seiffert_from_mean(MEANS["C"])
    assert hat_inverse(fC, 0.8) == pytest.approx(0.5, abs=1e-12)


def test_hat_inverse_roundtrip():
    fN = seiffert_from_mean(MEANS["RMS"])
    y = float(fN.hat(0.3))
    assert hat_inverse(fN, y) == pytest.approx(0.3, abs=1e-12)


def test_hat_inverse_boundary_values():
    fC = seiffert_from_mean(MEANS["C"])
    assert hat_inverse(fC, 1.0) == 0.0
    assert hat_inverse(fC, 0.5) == 1.0


def test_hat_inverse_rejects_identity():
    with pytest.raises(ValueError):
        hat_inverse(SEIFFERT_FUNCTIONS["id"], 1.0)


# ---------------------------------------------------------------------------
# shifted-argument bounds


@pytest.mark.parametrize("alpha", [0.5, 1.0, 1.5])
def test_gini_vs_contraharmonic(alpha):
    r = shift_bounds(gini(1, alpha), MEANS["C"])
    assert r.lower_constant == pytest.approx(math.sqrt(alpha / 2), abs=1e-9)
    assert r.upper_constant == pytest.approx(1.0, abs=1e-9)
    assert r.hat_direction == "decreasing"


def test_power_vs_rms():
    alpha = 1.5
    r = shift_bounds(power_mean(alpha), MEANS["RMS"])
    assert r.lower_constant == pytest.approx(math.sqrt(alpha - 1), abs=1e-9)
    assert r.upper_constant == pytest.approx(
        math.sqrt(4 ** (1 - 1 / alpha) - 1), abs=1e-9
    )
    rep = check_shift_soundness(power_mean(alpha), MEANS["RMS"], r, samples=4000)
    assert rep.passed, rep.summary()


@pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5])
def test_power_vs_harmonic(alpha):
    r = shift_bounds(power_mean(alpha), MEANS["H"])
    assert r.lower_constant == pytest.approx(math.sqrt((1 - alpha) / 2), abs=1e-9)
    assert r.hat_direction == "increasing"
    rep = check_shift_soundness(power_mean(alpha), MEANS["H"], r, samples=4000)
    assert rep.passed, rep.summary()


def test_quotient_mean_vs_contraharmonic():
    r = shift_bounds(MEANS["QH"], MEANS["C"])
    assert r.lower_constant == pytest.approx(math.sqrt(2) / 2, abs=1e-9)
    assert r.upper_constant == pytest.approx(1.0, abs=1e-9)
    rep = check_shift_soundness(MEANS["QH"], MEANS["C"], r, samples=4000)
    assert rep.passed, rep.summary()


def test_shift_objective_in_unit_interval():
    r = shift_bounds(gini(1, 1.2), MEANS["C"], trace=True)
    vals = r.objective_trace[:, 1]
    assert np.all(vals > 0) and np.all(vals <= 1 + 1e-12)


def test_shift_tightened_constant_violates():
    alpha = 1.0
    from seiffert import shift_mean

    r = shift_bounds(gini(1, alpha), MEANS["C"])
    p_bad = min(r.lower_constant + 1e-3, 1.0)
    x, y = sample_pairs(10000)
    nt = shift_mean(MEANS["C"], p_bad)(x, y)
    marg = (gini(1, alpha)(x, y) - nt) / np.maximum(x, y)
    assert np.min(marg) < -1e-9


def test_shift_precondition_rejected():
    with pytest.raises(MeanOrderError):
        shift_bounds(MEANS["P"], MEANS["C"])  # P < A, C > A: mixed case
