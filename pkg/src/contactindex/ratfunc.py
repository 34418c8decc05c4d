"""Exact rational functions in one variable z.

A :class:`RationalFn` is a quotient of Laurent polynomials kept in a
canonical reduced form:

* the denominator is an ordinary polynomial (no negative exponents) with a
  nonzero constant term, primitive integer coefficients and positive
  leading coefficient;
* after splitting the numerator as z^a * n0 with n0 having a nonzero
  constant term, gcd(n0, den) = 1.

Every operation is exact; reduction happens on construction, so sums over
many fixed points never accumulate removable factors.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .laurent import LaurentPoly


class NotPolynomial(ArithmeticError):
    """The rational function is not a Laurent polynomial."""


class ZeroFunction(ArithmeticError):
    """Order bounds are undefined for the zero function."""


# --------------------------------------------------------------------------
# integer polynomial helpers (dense lists, index = exponent)
# --------------------------------------------------------------------------

def _lp_to_dense(p: LaurentPoly) -> list:
    """Ordinary Laurent polynomial -> dense coefficient list."""
    deg = p.max_exp()
    out = [0] * (deg + 1)
    for e, c in p.coeffs.items():
        out[e] = c
    return out


def _dense_to_lp(coeffs: list) -> LaurentPoly:
    return LaurentPoly({e: c for e, c in enumerate(coeffs) if c != 0})


def _to_primitive_int(coeffs: list) -> list:
    """Scale a rational coefficient list to a primitive integer one."""
    den_lcm = 1
    for c in coeffs:
        d = Fraction(c).denominator
        den_lcm = den_lcm * d // int_gcd(den_lcm, d)
    ints = [int(c * den_lcm) for c in coeffs]
    content = 0
    for c in ints:
        content = int_gcd(content, abs(c))
    if content > 1:
        ints = [c // content for c in ints]
    return ints


def _trim(a: list) -> list:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _content(a: list) -> int:
    g = 0
    for c in a:
        g = int_gcd(g, abs(c))
    return g


def _pseudo_rem(a: list, b: list) -> list:
    """Pseudo-remainder of integer polynomials, deg(a) >= deg(b) >= 0."""
    a = a[:]
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        la = a[-1]
        # a <- lb*a - la*z^(da-db)*b
        a = [lb * c for c in a]
        shift = da - db
        for i, c in enumerate(b):
            a[shift + i] -= la * c
        a = _trim(a)
    return a


def _int_poly_gcd(a: list, b: list) -> list:
    """Primitive gcd of integer polynomials via the primitive PRS.

    Content is stripped after every pseudo-remainder step, which keeps
    coefficient growth polynomial at the degrees arising here.
    """
    a, b = _trim(a), _trim(b)
    if not a:
        base = b
    elif not b:
        base = a
    else:
        if len(a) < len(b):
            a, b = b, a
        while b:
            r = _pseudo_rem(a, b)
            c = _content(r)
            if c > 1:
                r = [x // c for x in r]
            a, b = b, r
        base = a
    # gcd of contents is irrelevant: callers only cancel the polynomial part
    c = _content(base)
    if c > 1:
        base = [x // c for x in base]
    if base and base[-1] < 0:
        base = [-x for x in base]
    return base


def _exact_div_dense(a: list, b: list) -> list:
    """Exact division of dense rational polys; raises if the remainder is nonzero."""
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = Fraction(b[-1])
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    if any(a[: len(b) - 1]):
        raise ArithmeticError("polynomial division left a remainder")
    return q


# --------------------------------------------------------------------------


class RationalFn:
    """Quotient of Laurent polynomials in canonical reduced form.

    >>> z = LaurentPoly.monomial(1)
    >>> RationalFn(1 - z**3, 1 - z).to_laurent()
    LaurentPoly('1 + z + z^2')
    >>> RationalFn.from_laurent(z) + RationalFn(1 - z, 1 - z)
    RationalFn(1 + z, 1)
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        num = _as_laurent(num)
        den = _as_laurent(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = LaurentPoly.zero()
            self.den = LaurentPoly.one()
            return
        # clear z-powers: denominator becomes ordinary with nonzero constant term
        shift = -den.min_exp()
        den = den.shifted(shift)
        num = num.shifted(shift)
        a = num.min_exp()
        n0 = num.shifted(-a)
        d_dense = _lp_to_dense(den)
        n_dense = _lp_to_dense(n0)
        g = _int_poly_gcd(_to_primitive_int(n_dense), _to_primitive_int(d_dense))
        if len(g) > 1:
            n_dense = _exact_div_dense(n_dense, g)
            d_dense = _exact_div_dense(d_dense, g)
        # canonical scale: primitive integer denominator, positive leading coeff
        d_prim = _to_primitive_int(d_dense)
        scale = Fraction(d_prim[-1], 1) / Fraction(d_dense[-1])
        if d_prim[-1] < 0:
            d_prim = [-c for c in d_prim]
            scale = -scale
        self.num = _dense_to_lp([Fraction(c) * scale for c in n_dense]).shifted(a)
        self.den = _dense_to_lp(d_prim)

    @classmethod
    def from_laurent(cls, p) -> "RationalFn":
        return cls(_as_laurent(p), LaurentPoly.one())

    @classmethod
    def zero(cls) -> "RationalFn":
        return cls.from_laurent(LaurentPoly.zero())

    @classmethod
    def one(cls) -> "RationalFn":
        return cls.from_laurent(LaurentPoly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    # ------------------------------------------------------------- arithmetic
    def __add__(self, other):
        other = _as_ratfn(other)
        if other is None:
            return NotImplemented
        # common-factor aware cross multiplication keeps degrees down
        g = _int_poly_gcd(_lp_to_dense(self.den), _lp_to_dense(other.den))
        if len(g) > 1:
            d1 = _dense_to_lp(_exact_div_dense(_lp_to_dense(self.den), g))
            d2 = _dense_to_lp(_exact_div_dense(_lp_to_dense(other.den), g))
            num = self.num * d2 + other.num * d1
            den = self.den * d2
        else:
            num = self.num * other.den + other.num * self.den
            den = self.den * other.den
        return RationalFn(num, den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        other = _as_ratfn(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfn(other)
        if other is None:
            return NotImplemented
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfn(other)
        if other is None:
            return NotImplemented
        return RationalFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_ratfn(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = _as_ratfn(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # ------------------------------------------------------------- conversion
    def to_laurent(self) -> LaurentPoly:
        """Return the function as a Laurent polynomial, exactly.

        Raises :class:`NotPolynomial` when the reduced denominator is not a
        unit; for localization sums this signals fixed-point data that does
        not come from a genuine manifold.
        """
        if self.den.is_constant():
            c = self.den.coeff(0)
            return self.num.scaled(Fraction(1, 1) / Fraction(c))
        raise NotPolynomial(f"denominator {self.den} does not divide numerator")

    def ord_bounds(self) -> tuple:
        """(order of vanishing at z=0, degree of growth at z=infinity).

        The function is bounded at 0 iff the first entry is >= 0 (a zero
        limit iff > 0), and bounded at infinity iff the second is <= 0
        (a zero limit iff < 0).
        """
        if self.num.is_zero():
            raise ZeroFunction("order bounds of the zero function")
        return (
            self.num.min_exp() - self.den.min_exp(),
            self.num.max_exp() - self.den.max_exp(),
        )

    def __repr__(self):
        return f"RationalFn({self.num}, {self.den})"


def _as_laurent(p) -> LaurentPoly:
    if isinstance(p, LaurentPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return LaurentPoly({0: p})
    raise TypeError(f"cannot interpret {p!r} as a Laurent polynomial")


def _as_ratfn(f):
    if isinstance(f, RationalFn):
        return f
    if isinstance(f, (int, Fraction, LaurentPoly)):
        return RationalFn.from_laurent(_as_laurent(f))
    return None


# spec-level operation names -------------------------------------------------

def rf_add(a: RationalFn, b: RationalFn) -> RationalFn:
    """Exact normalized sum of two rational functions."""
    return a + b


def rf_to_laurent(f: RationalFn) -> LaurentPoly:
    """Convert to a Laurent polynomial; raises NotPolynomial otherwise."""
    return f.to_laurent()


def ord_bounds(f: RationalFn) -> tuple:
    """Order of f at z=0 and degree at z=infinity; raises ZeroFunction on 0."""
    return f.ord_bounds()
