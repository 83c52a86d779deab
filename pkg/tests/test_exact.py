from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from gencatalan.exact import (
    binom_rational,
    divides,
    format_rational,
    is_prime,
    legendre_valuation,
    valuation,
)

from oracles import falling_binom

small_rationals = st.builds(
    Fraction, st.integers(-30, 30), st.integers(1, 5)
)


def test_binom_examples():
    assert binom_rational(Fraction(7, 3), 0) == 1
    assert binom_rational(Fraction(-3, 2), 1) == Fraction(-3, 2)
    assert binom_rational(Fraction(1, 2), 2) == Fraction(-1, 8)


def test_binom_integer_top_below_k_is_zero():
    for n in range(6):
        for k in range(n + 1, 9):
            assert binom_rational(n, k) == 0


def test_binom_negative_k_rejected():
    with pytest.raises(ValueError):
        binom_rational(3, -1)


@given(small_rationals, st.integers(0, 20))
def test_pascal_rule(x, k):
    if k == 0:
        assert binom_rational(x, 0) == 1
    else:
        assert binom_rational(x, k) == binom_rational(x - 1, k) + binom_rational(x - 1, k - 1)


@given(small_rationals, st.integers(0, 20))
def test_binom_matches_falling_factorial(x, k):
    assert binom_rational(x, k) == falling_binom(x, k)


@given(st.integers(-40, 40), st.sampled_from([2, 3, 5]), st.integers(0, 25))
def test_non_integer_top_never_vanishes(m, p, k):
    if m % p == 0:
        m += 1
    assert binom_rational(Fraction(m, p), k) != 0


def test_valuation_examples():
    assert valuation(3, 9) == 2
    assert valuation(2, Fraction(3, 8)) == -3
    assert valuation(5, 1) == 0
    with pytest.raises(ValueError):
        valuation(2, 0)


@given(
    st.fractions().filter(lambda x: x != 0),
    st.fractions().filter(lambda x: x != 0),
    st.sampled_from([2, 3, 5, 7]),
)
def test_valuation_is_additive(x, y, p):
    assert valuation(p, x * y) == valuation(p, x) + valuation(p, y)


def test_legendre_examples():
    assert legendre_valuation(2, 4) == 3
    assert legendre_valuation(3, 9) == 4
    assert legendre_valuation(7, 0) == 0


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_legendre_matches_factorial_valuation(p):
    for k in range(201):
        v = legendre_valuation(p, k)
        assert v == valuation(p, factorial(k))
        if k >= 1:
            assert v * (p - 1) <= k - 1


def test_divides_and_primes():
    assert divides(3, 0)
    assert divides(2, Fraction(4, 3))
    assert not divides(2, Fraction(3, 2))
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_format_rational():
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(4) == "4"
