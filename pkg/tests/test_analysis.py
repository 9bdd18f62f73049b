"""Comparison verdicts, Schur classification, corpora, combinators."""

import numpy as np
import pytest

from seiffert import (
    CORPUS_NAMES,
    MEANS,
    SEIFFERT_FUNCTIONS,
    Mean,
    MeanOrderError,
    combine_half_square,
    combine_power,
    compare,
    harmonic_weighted_dual,
    mean_from_seiffert,
    schur_classify,
    seiffert_from_mean,
    shift_mean,
    validate_mean,
    verify_corpus,
)
from seiffert.transform import FAMILY_SHAPES, family_member

ARCSIN_TAN_CROSSING = 0.9999060124126699  # root of arcsin t = tan t in (0,1)


def test_compare_arithmetic_below_inverse_tangent_mean():
    v = compare(MEANS["A"], MEANS["T"])
    assert v.relation == "<="


def test_compare_known_chain():
    for small, big in [("min", "H"), ("H", "G"), ("G", "L"), ("L", "P"), ("P", "A"),
                       ("A", "NS"), ("NS", "T"), ("T", "max")]:
        assert compare(MEANS[small], MEANS[big]).relation == "<=", (small, big)


def test_compare_incomparable_pair_witnesses():
    tan_mean = mean_from_seiffert(SEIFFERT_FUNCTIONS["tan"])
    v = compare(MEANS["P"], tan_mean)
    assert v.relation == "incomparable"
    w_lo, w_hi = sorted(v.witnesses)
    assert w_lo < ARCSIN_TAN_CROSSING < w_hi


def test_compare_self_indistinguishable():
    assert compare(MEANS["A"], MEANS["A"]).relation == "indistinguishable"


def test_compare_antisymmetric():
    v1 = compare(MEANS["G"], MEANS["C"])
    v2 = compare(MEANS["C"], MEANS["G"])
    assert (v1.relation, v2.relation) == ("<=", ">=")
    assert v1.witnesses == v2.witnesses
    assert v1.worst_margin == v2.worst_margin


def test_schur_examples():
    v = schur_classify(MEANS["T"])
    assert (v.classification, v.strict) == ("schur_convex", True)
    v = schur_classify(MEANS["L"])
    assert (v.classification, v.strict) == ("schur_concave", True)
    v = schur_classify(MEANS["A"])
    assert v.classification == "affine"
    assert v.worst_monotonicity_defect == 0.0


def test_schur_concave_seed_gives_convex_mean():
    # concave representative => Schur-convex induced mean
    M = mean_from_seiffert(SEIFFERT_FUNCTIONS["sin"])
    assert schur_classify(M).classification == "schur_convex"
    M = mean_from_seiffert(SEIFFERT_FUNCTIONS["sinh"])
    assert schur_classify(M).classification == "schur_concave"


@pytest.mark.parametrize("base", sorted(FAMILY_SHAPES))
@pytest.mark.parametrize("depth", [0, 1, 2, 3])
def test_schur_families(base, depth):
    expected = "schur_convex" if FAMILY_SHAPES[base] == "concave" else "schur_concave"
    M = mean_from_seiffert(family_member(base, depth), validate=False)
    v = schur_classify(M)
    assert v.classification == expected, (base, depth, v)
    assert v.strict, (base, depth)


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_corpora_pass(name):
    rep = verify_corpus(name, points=2500)
    assert rep.passed, "\n".join(rep.lines())


def test_corpus_unknown_name():
    with pytest.raises(KeyError):
        verify_corpus("lemma99")


def test_half_square_combinator():
    for name in ("G", "L", "P"):
        out = combine_half_square(MEANS[name])
        assert validate_mean(out, samples=2048).passed, name
        # identity with the direct square-over-arithmetic construction
        x, y = np.array([1.0, 0.2, 6.0]), np.array([2.0, 5.0, 6.5])
        direct = shift_mean(MEANS[name], 0.5)(x, y) ** 2 / MEANS["A"](x, y)
        assert np.allclose(out(x, y), direct, rtol=1e-12), name


def test_half_square_fixed_point_at_arithmetic():
    out = combine_half_square(MEANS["A"])
    x, y = 1.3, 4.1
    assert out(x, y) == pytest.approx(MEANS["A"](x, y), rel=1e-13)


def test_half_square_rejects_large_means():
    with pytest.raises(MeanOrderError):
        combine_half_square(MEANS["C"])


def test_square_over_arithmetic_alone_is_not_a_mean():
    H, A = MEANS["H"], MEANS["A"]
    direct = Mean("H^2/A", lambda x, y: H._fn(x, y) ** 2 / A._fn(x, y))
    rep = validate_mean(direct)
    assert not rep.passed
    bad = [c for c in rep.checks if c.name == "betweenness" and not c.passed]
    assert bad and bad[0].witness is not None


def test_power_combinator_specializes_to_half_square():
    x, y = np.array([1.0, 3.3, 0.7]), np.array([2.0, 0.9, 0.7])
    for name in ("G", "L"):
        a = combine_power(MEANS[name], 0.5)(x, y)
        b = combine_half_square(MEANS[name])(x, y)
        assert np.max(np.abs(a - b) / b) < 1e-12


def test_power_combinator_examples():
    out = combine_power(MEANS["L"], 1 / 3)
    assert validate_mean(out, samples=2048).passed
    x, y = np.array([2.0, 0.3]), np.array([0.5, 4.0])
    t = 1 / 3
    direct = shift_mean(MEANS["L"], t)(x, y) ** (1 / t) * MEANS["A"](x, y) ** (1 - 1 / t)
    assert np.allclose(out(x, y), direct, rtol=1e-12)
    a = combine_power(MEANS["A"], 0.7)
    assert a(1.0, 3.0) == pytest.approx(2.0, rel=1e-13)


def test_weighted_dual_trivia():
    fP = seiffert_from_mean(MEANS["P"])
    fT = seiffert_from_mean(MEANS["T"])
    z = np.linspace(1e-4, 1 - 1e-4, 300)
    same = harmonic_weighted_dual(fP, fP, lambda u, v: 0.5 * (u + v))
    assert np.allclose(same(z), fP(z), rtol=1e-13)
    proj = harmonic_weighted_dual(fP, fT, lambda u, v: u)
    assert np.allclose(proj(z), fP(z), rtol=1e-13)


def test_weighted_dual_harmonic_identity():
    # averaging the extreme representatives produces the harmonic mean
    h = harmonic_weighted_dual(
        SEIFFERT_FUNCTIONS["min"], SEIFFERT_FUNCTIONS["max"], lambda u, v: 0.5 * (u + v)
    )
    z = np.linspace(1e-4, 1 - 1e-4, 300)
    assert np.allclose(h(z), z / (1 - z * z), rtol=1e-12)
    induced = mean_from_seiffert(h, validate=False)
    x, y = np.array([1.0, 0.4]), np.array([5.0, 2.2])
    assert np.allclose(induced(x, y), MEANS["H"](x, y), rtol=1e-12)


def test_weighted_dual_asymmetric_identity():
    # induced mean must be M N / K(N, M) even for non-symmetric K
    fP = seiffert_from_mean(MEANS["P"])
    fT = seiffert_from_mean(MEANS["T"])
    K = lambda u, v: 0.2 * u + 0.8 * v
    h = harmonic_weighted_dual(fP, fT, K)
    induced = mean_from_seiffert(h, validate=False)
    x, y = np.array([1.0, 2.5, 0.3]), np.array([3.0, 0.8, 0.31])
    P, T = MEANS["P"](x, y), MEANS["T"](x, y)
    assert np.allclose(induced(x, y), P * T / K(T, P), rtol=1e-10)
