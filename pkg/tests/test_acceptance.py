"""Acceptance gate: one test per shipped criterion, at the stated tolerances.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
PASS lines.  Criterion 3's companion constant check (the -0.016 value for
the integrated arcsin/tan gap at 1) is expected to fail: the faithful
computation of that quantity gives -0.0604 (see test_c03_quoted_gap_value).
"""

import itertools
import math

import numpy as np
import pytest

import seiffert as sf
from seiffert.sampling import sample_pairs

CATALOG = dict(
    sf.MEANS, **{"gini(1,0.5)": sf.gini(1, 0.5), "power(1.5)": sf.power_mean(1.5)}
)

FAMILY_MEMBERS = [
    (base, depth) for base in sf.FAMILY_BASES for depth in range(4)
]


def _ok(n, msg):
    print(f"\nACCEPTANCE {n}: PASS - {msg}")


def test_c01_convex_combination_constants():
    mn, mx = sf.MEANS["min"], sf.MEANS["max"]
    cases = [
        ("sin", "upper", 1 / (2 * math.sin(1))),
        ("arcsin", "lower", 1 / math.pi),
        ("tan", "lower", 1 / (2 * math.tan(1))),
        ("arctan", "upper", 2 / math.pi),
        ("tanh", "upper", 1 / (2 * math.tanh(1))),
        ("sinh", "lower", 1 / (2 * math.sinh(1))),
        ("arsinh", "upper", 1 / (2 * math.asinh(1))),
        ("artanh", "lower", 0.0),  # only the trivial lower bound exists
    ]
    for base, side, expect in cases:
        M = sf.mean_from_seiffert(sf.SEIFFERT_FUNCTIONS[base])
        r = sf.convex_combination_bounds(mn, M, mx)
        got = r.lower_constant if side == "lower" else r.upper_constant
        assert abs(got - expect) < 1e-6, (base, got, expect)
    _ok(1, "eight min/max weight constants within 1e-6 of closed forms")


def test_c02_shift_bound_constants():
    C, RMS, H, QH = (sf.MEANS[k] for k in ("C", "RMS", "H", "QH"))
    for alpha in (0.5, 1.0, 1.5):
        r = sf.shift_bounds(sf.gini(1, alpha), C)
        assert abs(r.lower_constant - math.sqrt(alpha / 2)) < 1e-6, alpha
        assert abs(r.upper_constant - 1.0) < 1e-6, alpha
    alpha = 1.5
    r = sf.shift_bounds(sf.power_mean(alpha), RMS)
    assert abs(r.lower_constant - math.sqrt(alpha - 1)) < 1e-6
    assert abs(r.upper_constant - math.sqrt(4 ** (1 - 1 / alpha) - 1)) < 1e-6
    for alpha in (-0.5, 0.0, 0.5):
        r = sf.shift_bounds(sf.power_mean(alpha), H)
        assert abs(r.lower_constant - math.sqrt((1 - alpha) / 2)) < 1e-6, alpha
    r = sf.shift_bounds(QH, C)
    assert abs(r.lower_constant - math.sqrt(2) / 2) < 1e-6
    _ok(2, "all shifted-argument constants within 1e-6 of closed forms")


def test_c03_inequality_corpora():
    for name in sf.CORPUS_NAMES:
        rep = sf.verify_corpus(name, points=10000)
        assert rep.passed, "\n".join(rep.lines())
        for check in rep.checks:
            if check.passed and check.witness is not None and "sign" not in check.name:
                assert check.margin > 0 or check.detail, (name, check)
    u1 = sf.family_member("arcsin", 1).value_at_one - sf.family_member("tan", 1).value_at_one
    assert u1 < 0  # the lemma's actual conclusion
    _ok(3, f"all six corpora strict at 1e4 points; integrated arcsin-tan gap at 1 = {u1:.6f} < 0")


@pytest.mark.xfail(
    strict=True,
    reason="the quoted approximation -0.016 for the integrated arcsin-tan gap at 1 "
    "disagrees with direct quadrature, which gives -0.060358 (both this package's "
    "panel integration and independent adaptive quadrature of (arcsin t - tan t)/t)",
)
def test_c03_quoted_gap_value():
    u1 = sf.family_member("arcsin", 1).value_at_one - sf.family_member("tan", 1).value_at_one
    assert abs(u1 - (-0.016)) <= 0.001


def test_c04_roundtrip_identities():
    for name, M in CATALOG.items():
        rep = sf.roundtrip_check(sf.SEIFFERT_FUNCTIONS["sin"], M, grid=1000)
        assert rep.passed, (name, rep.summary())
    for base, depth in FAMILY_MEMBERS:
        f = sf.family_member(base, depth)
        M = sf.mean_from_seiffert(f, validate=False)
        rep = sf.roundtrip_check(f, M, grid=1000)
        assert rep.passed, (base, depth, rep.summary())
    _ok(4, f"bijection round-trips to 1e-12 for {len(CATALOG)} catalog means and "
           f"{len(FAMILY_MEMBERS)} family members")


def test_c05_metric_structure():
    r = sf.mean_distance(sf.MEANS["min"], sf.MEANS["max"])
    assert abs(r.distance - 2.0) <= 1e-12

    for name, M in CATALOG.items():
        assert sf.mean_distance(sf.MEANS["A"], M).distance <= 1 + 1e-9, name

    names = sorted(CATALOG)
    pairs = list(itertools.combinations(names, 2))
    for a, b in pairs[:10]:
        r = sf.mean_distance(CATALOG[a], CATALOG[b])
        assert abs(r.distance - r.cross_check) <= 1e-6, (a, b)

    dist = {}
    for a, b in itertools.combinations(names, 2):
        dist[(a, b)] = dist[(b, a)] = sf.mean_distance(CATALOG[a], CATALOG[b]).distance
    for a, b, c in itertools.permutations(names, 3):
        assert dist[(a, c)] <= dist[(a, b)] + dist[(b, c)] + 1e-8, (a, b, c)
    _ok(5, "diameter pair exact, unit ball around A, dual-formula agreement, triangle inequality")


def test_c06_group_laws():
    z = np.linspace(1e-8, 1 - 1e-8, 256)
    names = ["sin", "tanh", "arcsin", "arctan"]
    fs = [sf.SEIFFERT_FUNCTIONS[n] for n in names]
    fid = sf.SEIFFERT_FUNCTIONS["id"]

    def close(u, v):
        return np.max(np.abs(u - v) / np.maximum(np.abs(u), 1e-300)) <= 1e-9

    for f, g, h in itertools.combinations(fs, 3):
        assert close(sf.oplus(sf.oplus(f, g), h)(z), sf.oplus(f, sf.oplus(g, h))(z))
    for f, g in itertools.combinations(fs, 2):
        assert close(sf.oplus(f, g)(z), sf.oplus(g, f)(z))
    for f in fs:
        assert close(sf.oplus(f, fid)(z), f(z))
        assert close(sf.oplus(f, sf.seiffert_negate(f))(z), z)
    for name in ("P", "T"):
        M = sf.MEANS[name]
        out = sf.oplus_mean(M, sf.mean_reflect(M))
        zz = z[1:]
        assert np.max(np.abs(out(1 + zz, 1 - zz) - 1.0)) <= 1e-9, name
    _ok(6, "group laws to 1e-9 on 256 points; M (+) (2A-M) = A for both inverse-circular means")


def test_c07_invariant_mean():
    K = sf.invariant_mean(sf.MEANS["A"], sf.MEANS["G"])
    a, g = 1.0, 2.0
    for _ in range(40):
        a, g = 0.5 * (a + g), math.sqrt(a * g)
    assert abs(K(1.0, 2.0) - a) <= 1e-10

    x, y = sample_pairs(1000)
    kv = K(x, y)
    resid = np.abs(K(sf.MEANS["A"](x, y), sf.MEANS["G"](x, y)) - kv) / kv
    assert np.max(resid) < 1e-12

    with pytest.raises(sf.ContractionError):
        sf.invariant_mean(sf.MEANS["min"], sf.MEANS["max"])
    _ok(7, "compound solve matches the classical iteration to 1e-10; "
           "invariance residual < 1e-12; diameter pair rejected")


def test_c08_schur_classification_families():
    verdicts = 0
    for base, depth in FAMILY_MEMBERS:
        expected = (
            "schur_convex" if sf.FAMILY_SHAPES[base] == "concave" else "schur_concave"
        )
        M = sf.mean_from_seiffert(sf.family_member(base, depth), validate=False)
        v = sf.schur_classify(M)
        assert v.classification == expected, (base, depth, v)
        assert v.strict, (base, depth)
        verdicts += 1
    assert verdicts == 32
    _ok(8, "all 32 family verdicts strictly match the expected classification")


def test_c09_series_gate():
    for a in (0.5, -0.5):
        f = sf.build_series_seiffert(sf.SeriesSpec("cubic", coefficients=(a,)))
        assert sf.validate_seiffert(f).passed
    for a in (0.501, -0.501):
        with pytest.raises(sf.SeriesSpecError):
            sf.build_series_seiffert(sf.SeriesSpec("cubic", coefficients=(a,)))
    for name, f in sf.COROLLARY_FUNCTIONS.items():
        assert sf.validate_seiffert(f, samples=2048).passed, name
    assert len(sf.COROLLARY_FUNCTIONS) == 8
    _ok(9, "cubic gate at +-1/2 sharp to 1e-3; all eight series-corollary functions in the band")


def test_c10_combinators():
    for name in ("G", "L", "P"):
        out = sf.combine_half_square(sf.MEANS[name])
        assert sf.validate_mean(out).passed, name

    H, A = sf.MEANS["H"], sf.MEANS["A"]
    direct = sf.Mean("H^2/A", lambda x, y: H._fn(x, y) ** 2 / A._fn(x, y))
    rep = sf.validate_mean(direct)
    assert not rep.passed
    witnesses = [c.witness for c in rep.checks if not c.passed]
    assert witnesses and witnesses[0] is not None

    x, y = sample_pairs(500)
    for name in ("G", "L", "P"):
        a = sf.combine_power(sf.MEANS[name], 0.5)(x, y)
        b = sf.combine_half_square(sf.MEANS[name])(x, y)
        assert np.max(np.abs(a - b) / b) <= 1e-12, name
    _ok(10, "half-square combinator valid for G, L, P; bare H^2/A fails with witness; "
            "power combinator at t=1/2 matches to 1e-12")
