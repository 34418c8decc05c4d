from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from contactindex.laurent import LaurentPoly, one_minus_z

Z = LaurentPoly.monomial(1)


def lp(d):
    return LaurentPoly(d)


def test_zero_coefficients_dropped():
    assert lp({0: 0, 3: 0}).is_zero()
    assert lp({2: 1, 3: 0}).coeffs == {2: 1}


def test_rejects_inexact_coefficients():
    with pytest.raises(TypeError):
        lp({0: 0.5})
    with pytest.raises(TypeError):
        lp({0.5: 1})


def test_basic_arithmetic():
    p = lp({-1: 1, 2: 3})
    q = lp({2: -3, 0: 5})
    assert p + q == lp({-1: 1, 0: 5})
    assert p - p == LaurentPoly.zero()
    assert p * LaurentPoly.one() == p
    assert (1 - Z) * (1 + Z) == 1 - Z**2
    assert one_minus_z(-2) == lp({0: 1, -2: -1})


def test_pow_and_shift():
    assert (1 + Z) ** 3 == lp({0: 1, 1: 3, 2: 3, 3: 1})
    assert Z.shifted(-4) == lp({-3: 1})
    with pytest.raises(ValueError):
        (1 + Z) ** -1


def test_reciprocal_variable():
    p = lp({-2: 3, 5: -1})
    assert p.reciprocal_variable() == lp({2: 3, -5: -1})
    assert p.reciprocal_variable().reciprocal_variable() == p


def test_exponent_range_and_eval():
    p = lp({-3: 2, 4: Fraction(1, 2)})
    assert p.min_exp() == -3 and p.max_exp() == 4
    assert p.at_one() == Fraction(5, 2)
    assert not p.is_integral()
    assert lp({0: 2, 7: -3}).is_integral()
    with pytest.raises(ValueError):
        LaurentPoly.zero().min_exp()


def test_formatting():
    assert str(lp({-1: 1, 0: -2, 3: 1})) == "z^-1 - 2 + z^3"
    assert str(LaurentPoly.zero()) == "0"


small_coeff = st.integers(min_value=-9, max_value=9)
small_poly = st.dictionaries(
    st.integers(min_value=-6, max_value=6), small_coeff, max_size=5
).map(LaurentPoly)


@given(small_poly, small_poly, small_poly)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(small_poly)
def test_additive_inverse(a):
    assert (a + (-a)).is_zero()
