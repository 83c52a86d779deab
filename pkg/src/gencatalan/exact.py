"""Exact scalar arithmetic: rationals, generalized binomials, p-adic valuations.

Everything downstream is built on :class:`fractions.Fraction`, which is always
kept in lowest terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def binom_rational(x, k: int) -> Fraction:
    """Generalized binomial coefficient prod_{i=1..k} (x - i + 1) / i.

    ``x`` may be any rational; ``k`` must be a non-negative integer.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    x = as_rational(x)
    result = Fraction(1)
    for i in range(1, k + 1):
        result *= (x - i + 1) / i
        if not result:
            break
    return result


def is_prime(n: int) -> bool:
    """Trial division; only meant for the small primes used in the checks."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def _int_valuation(p: int, m: int) -> int:
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def valuation(p: int, x) -> int:
    """p-adic valuation of a nonzero rational (negative if p divides the denominator)."""
    x = as_rational(x)
    if x == 0:
        raise ValueError("valuation of zero is undefined")
    return _int_valuation(p, x.numerator) - _int_valuation(p, x.denominator)


def divides(p: int, x) -> bool:
    """True if the rational ``x`` has p-adic valuation >= 1; zero counts as divisible."""
    x = as_rational(x)
    return x == 0 or valuation(p, x) >= 1


def legendre_valuation(p: int, k: int) -> int:
    """v_p(k!) = sum_i floor(k / p^i)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    total = 0
    pk = p
    while pk <= k:
        total += k // pk
        pk *= p
    return total


def format_rational(x) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
