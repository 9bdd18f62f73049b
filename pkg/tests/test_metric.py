"""Metric structure: distances, dual-formula agreement, triangle inequality."""

import itertools

import numpy as np
import pytest

from seiffert import (
    MEANS,
    SEIFFERT_FUNCTIONS,
    gini,
    mean_distance,
    seiffert_distance,
    seiffert_from_mean,
)

CATALOG = dict(MEANS, **{"gini(1,0.5)": gini(1, 0.5)})


def test_min_max_distance_is_two():
    r = mean_distance(MEANS["min"], MEANS["max"])
    assert r.distance == pytest.approx(2.0, abs=1e-12)
    assert r.converged


def test_self_distance_zero():
    f = SEIFFERT_FUNCTIONS["sin"]
    assert seiffert_distance(f, f).distance == 0.0
    assert mean_distance(MEANS["A"], MEANS["A"]).distance == 0.0


def test_arithmetic_geometric_distance_brute_force():
    # oracle: dense grid maximum of |1/z - sqrt(1-z^2)/z| on the safe range,
    # plus the analytic z -> 1 evaluation at the clipped endpoint
    fA = seiffert_from_mean(MEANS["A"])
    fG = seiffert_from_mean(MEANS["G"])
    z = np.linspace(1 / 512, 1 - 1e-8, 400001)
    brute = np.max(np.abs(1 / z - np.sqrt(1 - z * z) / z))
    r = seiffert_distance(fA, fG)
    assert r.distance == pytest.approx(brute, abs=1e-9)
    assert r.distance < 2
    assert r.endpoint == "upper"
    assert r.distance == pytest.approx(0.9998585886427021, abs=1e-9)


def test_unit_ball_centered_at_arithmetic():
    for name, M in CATALOG.items():
        r = mean_distance(MEANS["A"], M)
        assert r.distance <= 1 + 1e-9, (name, r.distance)


def test_dual_formula_agreement_ten_pairs():
    names = sorted(CATALOG)
    pairs = list(itertools.combinations(names, 2))[:10]
    for a, b in pairs:
        r = mean_distance(CATALOG[a], CATALOG[b])
        assert r.converged, (a, b, r.distance, r.cross_check)
        assert abs(r.distance - r.cross_check) <= 1e-6


def test_symmetry_exact():
    for a, b in [("A", "G"), ("L", "C"), ("P", "T")]:
        d1 = seiffert_distance(seiffert_from_mean(MEANS[a]), seiffert_from_mean(MEANS[b]))
        d2 = seiffert_distance(seiffert_from_mean(MEANS[b]), seiffert_from_mean(MEANS[a]))
        assert d1.distance == d2.distance


def test_triangle_inequality_all_catalog_triples():
    names = sorted(CATALOG)
    dist = {}
    for a, b in itertools.combinations(names, 2):
        d = mean_distance(CATALOG[a], CATALOG[b]).distance
        dist[(a, b)] = dist[(b, a)] = d
    for a, b, c in itertools.permutations(names, 3):
        assert dist[(a, c)] <= dist[(a, b)] + dist[(b, c)] + 1e-8, (a, b, c)


def test_distance_bounded_by_diameter():
    for a, b in itertools.combinations(sorted(CATALOG), 2):
        assert mean_distance(CATALOG[a], CATALOG[b]).distance <= 2 + 1e-9
