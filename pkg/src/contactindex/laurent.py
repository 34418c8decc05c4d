"""Exact Laurent polynomials in one variable z over the rationals.

Coefficients are arbitrary-precision rationals (``int`` or
``fractions.Fraction``); no floating point enters anywhere.  A polynomial
is stored as a sparse map from integer exponent to nonzero coefficient,
with the empty map representing zero.
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction  # exact reduced rational: gcd(|num|, den) = 1, den > 0


def _is_exact(c) -> bool:
    return isinstance(c, (int, Fraction))


class LaurentPoly:
    """A Laurent polynomial sum_e c_e z^e with exact rational coefficients.

    >>> z = LaurentPoly.monomial(1)
    >>> (1 - z**3) * LaurentPoly.monomial(-1)
    LaurentPoly('z^-1 - z^2')
    >>> LaurentPoly({0: 1, 2: -3}).coeff(2)
    -3
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in coeffs.items():
                if not isinstance(e, int):
                    raise TypeError(f"exponent {e!r} is not an integer")
                if not _is_exact(c):
                    raise TypeError(f"coefficient {c!r} is not an exact rational")
                if c != 0:
                    d[e] = c
        self.coeffs = d

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient=1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    # ------------------------------------------------------------------ basic
    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return not self.coeffs or set(self.coeffs) == {0}

    def coeff(self, exponent: int):
        return self.coeffs.get(exponent, 0)

    def min_exp(self) -> int:
        """Lowest exponent with nonzero coefficient; undefined for zero."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no minimal exponent")
        return min(self.coeffs)

    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no maximal exponent")
        return max(self.coeffs)

    def terms(self):
        """Iterate (exponent, coefficient) pairs in increasing exponent order."""
        return ((e, self.coeffs[e]) for e in sorted(self.coeffs))

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(Fraction(c).denominator == 1 for c in self.coeffs.values())

    # ------------------------------------------------------------- arithmetic
    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if _is_exact(other):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset((e, Fraction(c)) for e, c in self.coeffs.items()))

    # ------------------------------------------------------------ structural
    def shifted(self, s: int) -> "LaurentPoly":
        """Multiply by z^s."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {e + s: c for e, c in self.coeffs.items()}
        return res

    def reciprocal_variable(self) -> "LaurentPoly":
        """Substitute z -> z^-1."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {-e: c for e, c in self.coeffs.items()}
        return res

    def scaled(self, c) -> "LaurentPoly":
        if not _is_exact(c):
            raise TypeError(f"{c!r} is not an exact rational")
        return self * LaurentPoly({0: c})

    def at_one(self):
        """Sum of all coefficients, i.e. the evaluation at z = 1."""
        return sum(self.coeffs.values(), 0)

    def __repr__(self):
        return f"LaurentPoly({self._format()!r})"

    def __str__(self):
        return self._format()

    def _format(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if e == 0:
                body = str(mag)
            else:
                var = "z" if e == 1 else f"z^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


def one_minus_z(m: int) -> LaurentPoly:
    """The factor 1 - z^m (m may be negative)."""
    if m == 0:
        return LaurentPoly.zero()
    return LaurentPoly({0: 1, m: -1})
