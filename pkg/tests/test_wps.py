import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cywps.errors import NotWellFormedError
from cywps.exact import rat_det
from cywps.polytope import lattice_points
from cywps.wps import (
    WeightVector,
    dual_simplex,
    mirror_lattice,
    mirror_simplex,
    newton_count,
    newton_points,
    subset_gcd,
    weight_flags,
)
from conftest import random_well_formed


def test_parse():
    assert WeightVector.parse("1, 2,3").weights == (1, 2, 3)
    with pytest.raises(ValueError):
        WeightVector.parse("0,1,2")
    with pytest.raises(ValueError):
        WeightVector.parse("1,x,3")
    with pytest.raises(ValueError):
        WeightVector.parse("1,2")


def test_weight_flags_examples():
    assert weight_flags(WeightVector((1, 1, 1, 1, 1))) == (True, True)
    assert weight_flags(WeightVector((1, 2, 3, 4, 5))) == (True, False)
    assert weight_flags(WeightVector((2, 2, 3)))[0] is False


def test_subset_gcd_examples():
    w = WeightVector((1, 2, 3, 4, 5))
    assert subset_gcd(w, 0) == 15
    assert subset_gcd(w, 1 << 2) == 3
    w2 = WeightVector((1, 1, 2, 4, 8))
    assert subset_gcd(w2, 1 << 4) == 8


def test_newton_points_cubic_against_brute_force():
    w = WeightVector((1, 1, 1))
    pts = newton_points(w)
    brute = [
        (a, b, c)
        for a in range(4)
        for b in range(4)
        for c in range(4)
        if a + b + c == 3
    ]
    assert sorted(brute) == pts
    assert len(pts) == 10
    assert newton_count(w) == 10


def test_newton_points_contains_all_ones_and_pure_power():
    for ws in ((1, 2, 3), (1, 1, 6, 14, 21), (2, 3, 5, 5)):
        w = WeightVector(ws)
        assert (1,) * len(ws) in newton_points(w)
    assert (43, 0, 0, 0, 0) in newton_points(WeightVector((1, 1, 6, 14, 21)))


def test_mirror_lattice_cubic():
    lat = mirror_lattice(WeightVector((1, 1, 1)))
    assert set(lat.generators) == {(1, 0), (0, 1), (-1, -1)}


def test_mirror_lattice_112():
    lat = mirror_lattice(WeightVector((1, 1, 2)))
    v0, v1, v2 = lat.generators
    assert tuple(1 * a + 1 * b + 2 * c for a, b, c in zip(v0, v1, v2)) == (0, 0)
    assert v0 == (-1, -2)


def test_mirror_lattice_rejects_non_well_formed():
    with pytest.raises(NotWellFormedError):
        mirror_lattice(WeightVector((2, 2, 3)))


def test_quintic_simplex_volume_by_determinant():
    lat = mirror_lattice(WeightVector((1, 1, 1, 1, 1)))
    v0 = lat.generators[0]
    rows = [[x - y for x, y in zip(v, v0)] for v in lat.generators[1:]]
    assert abs(rat_det(rows)) == 5


def test_dual_simplex_triangle():
    w = WeightVector((1, 1, 1))
    poly = dual_simplex(w, mirror_lattice(w))
    assert set(poly.vertices) == {(2, -1), (-1, 2), (-1, -1)}
    assert poly.contains((0, 0), strict=True)


def test_dual_simplex_contains_newton_hull():
    w = WeightVector((1, 1, 2, 4, 5))
    lat = mirror_lattice(w)
    poly = dual_simplex(w, lat)
    for u in newton_points(w):
        assert poly.contains(lat.m_coords([x - 1 for x in u]))


def test_pairing_consistency_small():
    rng = random.Random(7)
    for _ in range(12):
        w = random_well_formed(rng, rng.choice((2, 3)), 25)
        lat = mirror_lattice(w)
        for u in newton_points(w):
            m = lat.m_coords([x - 1 for x in u])
            for i, v in enumerate(lat.generators):
                assert sum(a * b for a, b in zip(m, v)) == u[i] - 1


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_mirror_lattice_properties_random(data):
    rng = random.Random(data.draw(st.integers(0, 10**9)))
    dim = data.draw(st.sampled_from((2, 3, 4)))
    w = random_well_formed(rng, dim, 200)
    lat = mirror_lattice(w)
    gens = lat.generators
    # weighted relation
    for j in range(dim):
        assert sum(wi * g[j] for wi, g in zip(w.weights, gens)) == 0
    # primitivity
    from math import gcd

    for g in gens:
        acc = 0
        for x in g:
            acc = gcd(acc, abs(x))
        assert acc == 1
    # normalized volume of conv(v_i) equals the degree (determinant oracle)
    rows = [[x - y for x, y in zip(v, gens[0])] for v in gens[1:]]
    assert abs(rat_det(rows)) == w.degree


def test_dual_simplex_lattice_points_match_newton_points():
    w = WeightVector((1, 1, 1))
    lat = mirror_lattice(w)
    poly = dual_simplex(w, lat)
    pts = lattice_points(poly)
    assert len(pts) == len(newton_points(w))
    images = sorted(lat.m_coords([x - 1 for x in u]) for u in newton_points(w))
    assert images == pts
