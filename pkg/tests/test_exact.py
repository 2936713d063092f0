from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cywps.exact import (
    IntMatrix,
    format_rational,
    gcd_fold,
    parse_rational,
    primitive_vector,
    rat_det,
    rat_nullspace,
    rat_rank,
    smith_normal_form,
    unimodular_inverse,
)


def test_gcd_fold_examples():
    assert gcd_fold(15, []) == 15
    assert gcd_fold(43, [6, 14, 21]) == 1
    assert gcd_fold(16, [8, 4]) == 4


@given(st.integers(0, 10**6), st.lists(st.integers(0, 10**6), max_size=8))
def test_gcd_fold_order_insensitive(seed, extras):
    assert gcd_fold(seed, extras) == gcd_fold(seed, list(reversed(extras)))
    assert gcd_fold(seed, extras + extras) == gcd_fold(seed, extras)


def test_rational_rendering():
    assert format_rational(Fraction(1032, 5)) == "1032/5"
    assert format_rational(Fraction(-126)) == "-126"
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert parse_rational("-585/4") == Fraction(-585, 4)


@given(
    st.fractions(max_denominator=1000),
    st.fractions(max_denominator=1000),
)
def test_rational_arithmetic_exact(a, b):
    assert (a + b) - b == a


def _check_snf(a: IntMatrix):
    u, s, v = smith_normal_form(a)
    assert u.mul(s).mul(v).entries == a.entries
    assert abs(u.det()) == 1
    assert abs(v.det()) == 1
    diag = [s.at(i, i) for i in range(min(s.rows, s.cols))]
    for i in range(s.rows):
        for j in range(s.cols):
            if i != j:
                assert s.at(i, j) == 0
    assert all(d >= 0 for d in diag)
    for x, y in zip(diag, diag[1:]):
        if y:
            assert x and y % x == 0
    return diag


def test_snf_identity():
    ident = IntMatrix.identity(3)
    u, s, v = smith_normal_form(ident)
    assert s.entries == ident.entries
    _check_snf(ident)


def test_snf_row_examples():
    diag = _check_snf(IntMatrix.from_rows([[1, 1, 1]]))
    assert diag == [1]
    diag = _check_snf(IntMatrix.from_rows([[2, 4, 6]]))
    assert diag == [2]


def test_snf_deterministic():
    a = IntMatrix.from_rows([[6, 4], [8, 10]])
    assert smith_normal_form(a) == smith_normal_form(a)


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 4),
    st.integers(1, 4),
    st.data(),
)
def test_snf_random(m, n, data):
    entries = data.draw(
        st.lists(st.integers(-30, 30), min_size=m * n, max_size=m * n)
    )
    if not any(entries):
        entries[0] = 1
    _check_snf(IntMatrix(m, n, tuple(entries)))


def test_unimodular_inverse():
    m = IntMatrix.from_rows([[1, 2], [0, 1]])
    inv = unimodular_inverse(m)
    assert m.mul(inv).entries == IntMatrix.identity(2).entries
    with pytest.raises(ValueError):
        unimodular_inverse(IntMatrix.from_rows([[2, 0], [0, 1]]))


def test_rational_linear_algebra():
    assert rat_rank([[1, 2], [2, 4]]) == 1
    assert rat_det([[2, 0], [0, 3]]) == 6
    ns = rat_nullspace([[1, 1, 1]], 3)
    assert len(ns) == 2
    assert primitive_vector([Fraction(2, 3), Fraction(-4, 3)]) == ((1, -2), Fraction(2, 3))
