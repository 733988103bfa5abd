from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from divpart.errors import AllZero, NotCoprime, OutOfRange, VerticalSlope
from divpart.lattice import (
    ceil_point,
    compare_slopes,
    ext_euclid,
    in_upper_region,
    mod_inverse,
    slope,
    vertical_distance_num,
)


def test_ext_euclid_examples():
    assert ext_euclid([5, 7]) == (1, (3, -2))
    assert ext_euclid([4, 0]) == (4, (1, 0))
    res = ext_euclid([6, 15, 21])
    assert res.g == 3
    assert sum(c * v for c, v in zip(res.coefficients, (6, 15, 21))) == 3


def test_ext_euclid_errors():
    with pytest.raises(AllZero):
        ext_euclid([0, 0])
    with pytest.raises(ValueError):
        ext_euclid([])


@given(st.lists(st.integers(0, 2**80), min_size=1, max_size=6).filter(any))
def test_bezout_identity(values):
    g, coeffs = ext_euclid(values)
    assert sum(c * v for c, v in zip(coeffs, values)) == g
    expected = 0
    for v in values:
        expected = gcd(expected, v)
    assert g == expected


@pytest.mark.parametrize("a, n, expected", [(2, 5, 3), (1, 7, 1), (7, 5, 3)])
def test_mod_inverse_examples(a, n, expected):
    assert mod_inverse(a, n) == expected


def test_mod_inverse_sweep():
    # Builtin pow(a, -1, n) is the independent check.
    for n in range(2, 400):
        for a in range(1, n):
            if gcd(a, n) == 1:
                assert mod_inverse(a, n) == pow(a, -1, n)


@given(st.integers(2, 10**4), st.integers(1, 10**6))
def test_mod_inverse_property(n, a):
    if gcd(a, n) != 1:
        with pytest.raises(NotCoprime):
            mod_inverse(a, n)
    else:
        u = mod_inverse(a, n)
        assert 1 <= u <= n - 1
        assert a * u % n == 1


def test_mod_inverse_errors():
    with pytest.raises(NotCoprime):
        mod_inverse(4, 6)
    with pytest.raises(OutOfRange):
        mod_inverse(1, 1)


@pytest.mark.parametrize("i, b, expected", [(2, (5, 7), 1), (1, (5, 7), 3), (1, (2, 3), 1)])
def test_vertical_distance_examples(i, b, expected):
    assert vertical_distance_num(i, b) == expected
    # Direct definition: b1 * (ceil(b2*i/b1) - b2*i/b1).
    b1, b2 = b
    direct = b1 * (Fraction(ceil_point(i, b).y) - Fraction(b2 * i, b1))
    assert direct == expected


def test_vertical_distance_errors():
    with pytest.raises(OutOfRange):
        vertical_distance_num(0, (5, 7))
    with pytest.raises(OutOfRange):
        vertical_distance_num(5, (5, 7))
    with pytest.raises(NotCoprime):
        vertical_distance_num(1, (4, 6))


def test_vertical_distance_bijection_small():
    for b1 in range(2, 25):
        for b2 in range(b1, 3 * b1):
            if gcd(b1, b2) == 1:
                values = sorted(vertical_distance_num(i, (b1, b2)) for i in range(1, b1))
                assert values == list(range(1, b1))


@pytest.mark.parametrize(
    "p, expected", [((2, 3), Fraction(3, 2)), ((4, 6), Fraction(3, 2)), ((5, 2), Fraction(2, 5))]
)
def test_slope(p, expected):
    assert slope(p) == expected


def test_vertical_slope():
    with pytest.raises(VerticalSlope):
        slope((0, 3))
    assert compare_slopes((0, 3), (1, 100)) == 1
    assert compare_slopes((2, 3), (4, 6)) == 0


@given(st.integers(1, 1000), st.integers(0, 1000), st.integers(1, 50))
def test_slope_scale_invariant(x, y, alpha):
    assert slope((alpha * x, alpha * y)) == slope((x, y))


@pytest.mark.parametrize(
    "p, expected", [((2, 3), True), ((3, 4), False), ((0, 0), False), ((5, 7), False), ((0, 1), True)]
)
def test_in_upper_region(p, expected):
    assert in_upper_region(p, (5, 7)) is expected
