from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mapcensus.bigmath import (
    NonExactDivision,
    as_int,
    binomial,
    divisors,
    double_factorial,
    exact_div,
    factorize,
    jordan_totient_2,
    multichoose,
)
from fractions import Fraction


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (7, 0, 1), (3, 5, 0), (-2, 1, 0), (5, -1, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_fractional_argument_vanishes():
    assert binomial(Fraction(5, 2), 1) == 0
    assert binomial(Fraction(6, 2), 2) == 3


@given(st.integers(0, 60), st.integers(0, 60))
def test_binomial_symmetry(n, k):
    if k <= n:
        assert binomial(n, k) == binomial(n, n - k)


@pytest.mark.parametrize("n,k,expected", [(3, 2, 6), (1, 5, 1), (0, 1, 0), (0, 0, 1), (4, 0, 1)])
def test_multichoose(n, k, expected):
    assert multichoose(n, k) == expected


@given(st.integers(1, 40), st.integers(0, 40))
def test_multichoose_is_binomial(n, k):
    assert multichoose(n, k) == binomial(n + k - 1, k)


@pytest.mark.parametrize("n,expected", [(5, 15), (6, 48), (-1, 1), (0, 1), (1, 1), (9, 945)])
def test_double_factorial(n, expected):
    assert double_factorial(n) == expected


def test_double_factorial_rejects_below_minus_one():
    with pytest.raises(ValueError):
        double_factorial(-2)


@pytest.mark.parametrize("L,expected", [(1, 1), (2, 3), (6, 24), (4, 12), (9, 72)])
def test_jordan_totient(L, expected):
    assert jordan_totient_2(L) == expected


@pytest.mark.parametrize("L", [0, -3])
def test_jordan_totient_rejects_nonpositive(L):
    with pytest.raises(ValueError):
        jordan_totient_2(L)


@given(st.integers(1, 50), st.integers(1, 50))
def test_jordan_totient_multiplicative(a, b):
    from math import gcd
    if gcd(a, b) == 1:
        assert jordan_totient_2(a * b) == jordan_totient_2(a) * jordan_totient_2(b)


def test_jordan_totient_divisor_sum():
    for n in range(1, 101):
        assert sum(jordan_totient_2(d) for d in divisors(n)) == n * n


def test_exact_div():
    assert exact_div(6, 3) == 2
    assert exact_div(0, 7) == 0
    with pytest.raises(NonExactDivision, match="non-exact division"):
        exact_div(5, 2)
    with pytest.raises(ValueError):
        exact_div(4, 0)


def test_exact_div_big():
    big = comb(200, 100)
    assert exact_div(big * 101, 101) == big


@pytest.mark.parametrize("n,expected", [(1, [1]), (6, [1, 2, 3, 6]), (9, [1, 3, 9]), (16, [1, 2, 4, 8, 16])])
def test_divisors(n, expected):
    assert divisors(n) == expected


def test_divisors_rejects_zero():
    with pytest.raises(ValueError):
        divisors(0)


def test_factorize():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(97) == {97: 1}


def test_as_int():
    assert as_int(Fraction(8, 4)) == 2
    assert as_int(Fraction(1, 2)) is None
    assert as_int(3.0) is None
