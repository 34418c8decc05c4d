"""Shared independent oracles for the test suite."""

from fractions import Fraction


def binom_poly(top: int, k: int) -> int:
    """Generalized binomial coefficient binom(top, k); top may be negative."""
    num = 1
    for i in range(k):
        num *= top - i
    val = Fraction(num)
    for i in range(1, k + 1):
        val /= i
    assert val.denominator == 1
    return int(val)


def chi_cp3_line_bundle(d: int) -> int:
    """chi(CP^3, O(d)) = binom(d+3, 3) for every integer d."""
    return binom_poly(d + 3, 3)
