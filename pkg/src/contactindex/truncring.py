"""Truncated graded polynomial rings over the rationals.

These model cohomology rings: generators x_1, ..., x_g of degree one with
relations x_i^(d_i + 1) = 0 and a global total-degree cap.  Products simply
drop truncated monomials, and integration reads off the coefficient of the
top monomial x_1^d_1 ... x_g^d_g (pairing with the fundamental class).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


class TruncRing:
    """Q[x_1..x_g] / (x_i^(d_i+1), total degree > cap).

    >>> R = TruncRing(("x",), (3,))
    >>> x = R.gen(0)
    >>> (x * x * x * x).is_zero()
    True
    >>> R.integrate(x ** 3)
    Fraction(1, 1)
    """

    __slots__ = ("names", "bounds", "cap")

    def __init__(self, names, bounds, cap=None):
        names = tuple(names)
        bounds = tuple(int(b) for b in bounds)
        if len(names) != len(bounds) or not names:
            raise ValueError("need one truncation bound per generator")
        if any(b < 0 for b in bounds):
            raise ValueError("truncation bounds must be nonnegative")
        self.names = names
        self.bounds = bounds
        # default cap: the top total degree actually representable
        self.cap = sum(bounds) if cap is None else int(cap)

    def _admits(self, expvec) -> bool:
        return (
            all(e <= b for e, b in zip(expvec, self.bounds))
            and sum(expvec) <= self.cap
        )

    def zero(self) -> "TruncElt":
        return TruncElt(self, {})

    def one(self) -> "TruncElt":
        return self.scalar(1)

    def scalar(self, c) -> "TruncElt":
        zero_vec = (0,) * len(self.names)
        return TruncElt(self, {zero_vec: Fraction(c)})

    def gen(self, i: int) -> "TruncElt":
        vec = tuple(1 if j == i else 0 for j in range(len(self.names)))
        return TruncElt(self, {vec: Fraction(1)})

    def element(self, monomials) -> "TruncElt":
        return TruncElt(self, {tuple(v): Fraction(c) for v, c in monomials.items()})

    def integrate(self, x: "TruncElt") -> Fraction:
        """Coefficient of the top monomial x_1^d_1 ... x_g^d_g."""
        if x.ring is not self:
            raise ValueError("element from a different ring")
        return x.monomials.get(self.bounds, Fraction(0))

    def __eq__(self, other):
        return (
            isinstance(other, TruncRing)
            and self.names == other.names
            and self.bounds == other.bounds
            and self.cap == other.cap
        )

    def __hash__(self):
        return hash((self.names, self.bounds, self.cap))

    def __repr__(self):
        rels = ", ".join(f"{n}^{b + 1}" for n, b in zip(self.names, self.bounds))
        return f"TruncRing(Q[{', '.join(self.names)}]/({rels}), cap={self.cap})"


class TruncElt:
    """Element of a :class:`TruncRing`; immutable after construction."""

    __slots__ = ("ring", "monomials")

    def __init__(self, ring: TruncRing, monomials: dict):
        self.ring = ring
        self.monomials = {
            v: Fraction(c)
            for v, c in monomials.items()
            if c != 0 and ring._admits(v)
        }

    def is_zero(self) -> bool:
        return not self.monomials

    def constant_term(self) -> Fraction:
        return self.monomials.get((0,) * len(self.ring.names), Fraction(0))

    def degree_part(self, d: int) -> "TruncElt":
        """The homogeneous component of total degree d."""
        return TruncElt(
            self.ring, {v: c for v, c in self.monomials.items() if sum(v) == d}
        )

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return self.ring.scalar(other)
        if isinstance(other, TruncElt):
            if other.ring != self.ring:
                raise ValueError("elements from different rings")
            return other
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        out = dict(self.monomials)
        for v, c in other.monomials.items():
            s = out.get(v, Fraction(0)) + c
            if s == 0:
                out.pop(v, None)
            else:
                out[v] = s
        return TruncElt(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncElt(self.ring, {v: -c for v, c in self.monomials.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        ring = self.ring
        out = {}
        for v1, c1 in self.monomials.items():
            for v2, c2 in other.monomials.items():
                v = tuple(a + b for a, b in zip(v1, v2))
                if not ring._admits(v):
                    continue
                s = out.get(v, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(v, None)
                else:
                    out[v] = s
        return TruncElt(ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers in a truncated ring")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self.monomials == other.monomials

    def __hash__(self):
        return hash((self.ring, frozenset(self.monomials.items())))

    def exp(self) -> "TruncElt":
        """exp of a nilpotent element as the truncated series sum x^k / k!."""
        if self.constant_term() != 0:
            raise ValueError("exp requires a zero degree-0 part")
        result = self.ring.one()
        power = self.ring.one()
        for k in range(1, self.ring.cap + 1):
            power = power * self
            if power.is_zero():
                break
            result = result + power * Fraction(1, factorial(k))
        return result

    def inverse(self) -> "TruncElt":
        """Inverse of an element with nonzero constant term (geometric series)."""
        c0 = self.constant_term()
        if c0 == 0:
            raise ZeroDivisionError("element with zero constant term")
        nil = (self - self.ring.scalar(c0)) * (Fraction(-1) / c0)
        # 1/(c0 (1 - nil)) = (1/c0) (1 + nil + nil^2 + ...)
        result = self.ring.one()
        power = self.ring.one()
        for _ in range(self.ring.cap):
            power = power * nil
            if power.is_zero():
                break
            result = result + power
        return result * (Fraction(1) / c0)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, TruncElt):
            return self * other.inverse()
        return NotImplemented

    def __repr__(self):
        if not self.monomials:
            return "TruncElt(0)"
        names = self.ring.names
        parts = []
        for v in sorted(self.monomials, key=lambda v: (sum(v), v)):
            c = self.monomials[v]
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, v) if e
            )
            parts.append(f"{c}" if not mono else f"{c}*{mono}")
        return f"TruncElt({' + '.join(parts)})"


# spec-level operation names -------------------------------------------------

def ring_exp(x: TruncElt) -> TruncElt:
    """Truncated exponential series of a nilpotent ring element."""
    return x.exp()


def ring_integrate(x: TruncElt) -> Fraction:
    """Pair with the fundamental class (top-monomial coefficient)."""
    return x.ring.integrate(x)
