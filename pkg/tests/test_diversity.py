import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from divpart.diversity import (
    as_counts,
    compare_diversity,
    diversity,
    epsilon_of_partition,
    hill_number,
    simpson_index,
    squared_cos_angle_with_ones,
)
from divpart.errors import NegativeOrder, SumMismatch, ZeroPart, ZeroVector

nonzero_vectors = st.lists(st.integers(0, 10**6), min_size=1, max_size=8).filter(any)


@pytest.mark.parametrize(
    "x, expected",
    [
        ((1, 1, 1, 1), Fraction(4)),
        ((12, 16, 20), Fraction(2304, 800)),
        ((5, 0, 0), Fraction(1)),
        ((3, 7, 10), Fraction(400, 158)),
        ((6, 14, 21), Fraction(1681, 673)),
        ((6, 15, 21), Fraction(98, 39)),
    ],
)
def test_simpson_index_values(x, expected):
    value = simpson_index(x)
    assert value.exact == expected
    assert value.approx == float(expected)


def test_simpson_index_lowest_terms():
    value = simpson_index((12, 16, 20)).exact
    assert (value.numerator, value.denominator) == (72, 25)
    assert math.gcd(value.numerator, value.denominator) == 1


def test_zero_vector_is_an_error():
    with pytest.raises(ZeroVector):
        simpson_index((0, 0, 0))
    with pytest.raises(ZeroVector):
        compare_diversity((0, 0), (1, 1))
    with pytest.raises(ZeroVector):
        squared_cos_angle_with_ones((0,))


def test_as_counts_rejects_bad_input():
    with pytest.raises(ValueError):
        as_counts([])
    with pytest.raises(ValueError):
        as_counts([1, -1])
    with pytest.raises(TypeError):
        as_counts([1.0, 2.0])


def test_big_integers_do_not_overflow():
    x = (2**130 + 1, 3 * 2**129)
    d = diversity(x)
    assert d == Fraction(sum(x) ** 2, sum(v * v for v in x))


@pytest.mark.parametrize(
    "x, q, expected",
    [
        ((1, 1, 1, 1, 1), 2, 5.0),
        ((24, 24, 24, 24, 4), 1, 4.476254888420231),
        ((1, 1, 2), math.inf, 2.0),
        ((3, 0, 5), 0, 2.0),
    ],
)
def test_hill_number_values(x, q, expected):
    assert hill_number(x, q) == pytest.approx(expected, rel=1e-12)


def test_hill_number_q1_oracle():
    # Independent evaluation of exp-Shannon from the proportions.
    p = [0.24, 0.24, 0.24, 0.24, 0.04]
    expected = math.exp(-sum(v * math.log(v) for v in p))
    assert hill_number((24, 24, 24, 24, 4), 1) == pytest.approx(expected, rel=1e-12)
    assert round(expected, 3) == 4.476


def test_hill_number_errors():
    with pytest.raises(NegativeOrder):
        hill_number((1, 2), -0.5)
    with pytest.raises(ZeroVector):
        hill_number((0, 0), 2)


@pytest.mark.parametrize(
    "x, y, expected",
    [((2, 3), (4, 6), 0), ((1, 1), (1, 2), 1), ((3, 7, 10), (3, 7, 11), 1), ((1, 2), (1, 1), -1)],
)
def test_compare_diversity(x, y, expected):
    assert compare_diversity(x, y) == expected


@pytest.mark.parametrize(
    "x, expected",
    [((1, 1, 1, 1, 1, 1), Fraction(1)), ((5, 0), Fraction(1, 2)), ((2, 3), Fraction(25, 26))],
)
def test_squared_cos(x, expected):
    assert squared_cos_angle_with_ones(x) == expected


@pytest.mark.parametrize(
    "parts, b, expected",
    [
        ([(3, 7, 10), (3, 7, 11)], (6, 14, 21), Fraction(4106, 300899)),
        ([(3, 6, 10), (3, 8, 11)], (6, 14, 21), Fraction(792, 243745)),
        ([(2, 5, 7), (4, 10, 14)], (6, 15, 21), Fraction(0)),
    ],
)
def test_epsilon_of_partition(parts, b, expected):
    # Expected values: 1 - min D / D(b) evaluated by hand from the norms.
    assert epsilon_of_partition(parts, b) == expected


def test_epsilon_rounding_matches_reported_values():
    balanced = float(epsilon_of_partition([(3, 7, 10), (3, 7, 11)], (6, 14, 21)))
    improved = float(epsilon_of_partition([(3, 6, 10), (3, 8, 11)], (6, 14, 21)))
    assert balanced == pytest.approx(0.013, abs=1e-3)
    assert improved == pytest.approx(0.003, abs=1e-3)
    # 0.0136458 rounds to 0.0136 at four places, not 0.0137.
    assert round(balanced, 4) == 0.0136
    assert round(improved, 4) == 0.0032


def test_epsilon_errors():
    with pytest.raises(SumMismatch):
        epsilon_of_partition([(1, 1), (1, 1)], (2, 3))
    with pytest.raises(ZeroPart):
        epsilon_of_partition([(0, 0), (2, 3)], (2, 3))
    with pytest.raises(SumMismatch):
        epsilon_of_partition([(1, 1, 1)], (1, 1))


@given(nonzero_vectors, st.integers(1, 1000))
def test_scale_invariance(x, alpha):
    assert simpson_index([alpha * v for v in x]) == simpson_index(x)


@given(nonzero_vectors)
def test_range(x):
    d = diversity(x)
    r = len(x)
    assert 1 <= d <= r
    assert (d == r) == (len(set(x)) == 1)


@given(nonzero_vectors)
def test_angle_identity(x):
    assert diversity(x) == len(x) * squared_cos_angle_with_ones(x)


@given(nonzero_vectors)
def test_hill_two_matches_simpson(x):
    assert hill_number(x, 2) == pytest.approx(float(diversity(x)), rel=1e-12)


@given(st.lists(st.integers(0, 1000), min_size=1, max_size=8).filter(any))
def test_hill_continuity_at_one(x):
    h1 = hill_number(x, 1)
    assert abs(hill_number(x, 1 + 1e-6) - h1) <= 1e-4
    assert abs(hill_number(x, 1 - 1e-6) - h1) <= 1e-4


@given(nonzero_vectors, nonzero_vectors)
def test_compare_matches_exact_subtraction(x, y):
    diff = diversity(x) - diversity(y)
    assert compare_diversity(x, y) == (diff > 0) - (diff < 0)
    assert compare_diversity(y, x) == -compare_diversity(x, y)
