"""Non-equivariant Euler characteristics from characteristic classes.

This is the independent cross-check engine: it never sees fixed-point
weights.  Working in the truncated cohomology ring of CP^(2n+1) it builds
Chern classes of the tangent bundle, the quotient line bundle L (with
c1(X) = (n+1) c1(L)) and the contact distribution D, converts them to
power sums by Newton's identities, and evaluates

    chi(X, wedge^p D* (x) L^-k) = integral of ch(wedge^p D*) ch(L^-k) Td(X)

entirely with lambda-ring recursions; formal Chern roots are never
materialized.  Genus factors (Todd, A-hat) enter through the logarithm of
their defining one-variable series composed with the power sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .characters import EXTERIOR, SYM, BundleSpec, InvalidSpec
from .truncring import TruncElt, TruncRing


class NonIntegralResult(ArithmeticError):
    """An index integral that is not an integer: always a bug, never data."""


# ---------------------------------------------------------------- series ----
# one-variable power series as coefficient lists [c0, c1, ...] over Q

def series_inverse(c, order: int):
    """Multiplicative inverse of a series with c[0] == 1."""
    inv = [Fraction(0)] * (order + 1)
    inv[0] = Fraction(1)
    for m in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            if j < len(c):
                acc += Fraction(c[j]) * inv[m - j]
        inv[m] = -acc
    return inv

def series_log(c, order: int):
    """log of a series with c[0] == 1, via g' = g * (log g)'."""
    out = [Fraction(0)] * (order + 1)
    for m in range(1, order + 1):
        gm = Fraction(c[m]) if m < len(c) else Fraction(0)
        acc = Fraction(0)
        for j in range(1, m):
            gk = Fraction(c[m - j]) if m - j < len(c) else Fraction(0)
            acc += j * out[j] * gk
        out[m] = gm - acc / m
    return out


def todd_log_series(order: int):
    """Coefficients of log( y / (1 - e^-y) )."""
    u = [Fraction((-1) ** k, factorial(k + 1)) for k in range(order + 1)]
    return [-c for c in series_log(u, order)]


def ahat_log_series(order: int):
    """Coefficients of log( (y/2) / sinh(y/2) )."""
    v = [Fraction(0)] * (order + 1)
    for k in range(0, order // 2 + 1):
        v[2 * k] = Fraction(1, 4**k * factorial(2 * k + 1))
    return [-c for c in series_log(v, order)]


# ---------------------------------------------------------------- bundles ---

@dataclass(frozen=True)
class BundleClassData:
    """A bundle known through its rank and Chern classes in a TruncRing."""

    rank: int
    chern: tuple  # (c_1, ..., c_min(rank, cap)) as TruncElt
    ring: TruncRing

    def c1(self) -> TruncElt:
        return self.chern[0] if self.chern else self.ring.zero()


def from_total_class(ring: TruncRing, total: TruncElt, rank: int) -> BundleClassData:
    chern = tuple(
        total.degree_part(i) for i in range(1, min(rank, ring.cap) + 1)
    )
    return BundleClassData(rank=rank, chern=chern, ring=ring)


def total_class(b: BundleClassData) -> TruncElt:
    out = b.ring.one()
    for c in b.chern:
        out = out + c
    return out


def power_sums(b: BundleClassData, upto: int | None = None) -> list:
    """Power sums p_1..p_upto of the Chern roots, by Newton's identities."""
    ring = b.ring
    upto = ring.cap if upto is None else upto
    e = [None] + list(b.chern)  # e[i] = c_i, zero beyond stored classes

    def ei(i):
        return e[i] if i < len(e) else ring.zero()

    p = [None]
    for k in range(1, upto + 1):
        acc = ei(k) * Fraction((-1) ** (k - 1) * k)
        for i in range(1, k):
            acc = acc + ei(i) * p[k - i] * Fraction((-1) ** (i - 1))
        p.append(acc)
    return p[1:]


def ch_from_chern(b: BundleClassData) -> TruncElt:
    """Chern character: rank + sum of p_j / j!."""
    out = b.ring.scalar(b.rank)
    for j, pj in enumerate(power_sums(b), start=1):
        out = out + pj * Fraction(1, factorial(j))
    return out


def _adams_dual(b: BundleClassData, j: int, psums) -> TruncElt:
    """ch of the j-th Adams operation applied to the dual bundle:
    sum_i e^(-j y_i), from the power sums of b."""
    out = b.ring.scalar(b.rank)
    for m, pm in enumerate(psums, start=1):
        out = out + pm * Fraction((-j) ** m, factorial(m))
    return out


def ch_lambda(b: BundleClassData, p: int, variant: str = EXTERIOR) -> TruncElt:
    """ch of wedge^p (dual) or Sym^p (dual) by the Newton recursion on the
    elementary/complete symmetric functions of the e^-y_i."""
    if variant == EXTERIOR and not 0 <= p <= b.rank:
        raise InvalidSpec(f"exterior power p={p} outside [0, {b.rank}]")
    if p < 0:
        raise InvalidSpec(f"power p={p} is negative")
    psums = power_sums(b)
    q = [None] + [_adams_dual(b, j, psums) for j in range(1, p + 1)]
    out = [b.ring.one()]
    for r in range(1, p + 1):
        acc = b.ring.zero()
        for j in range(1, r + 1):
            term = q[j] * out[r - j]
            if variant == EXTERIOR and j % 2 == 0:
                term = -term
            acc = acc + term
        out.append(acc * Fraction(1, r))
    return out[p]


# ----------------------------------------------------------------- model ----

@dataclass(frozen=True)
class CohModel:
    """Cohomology model of a contact manifold: TX, L and D Chern data."""

    ring: TruncRing
    n: int
    tx: BundleClassData
    line: BundleClassData
    dist: BundleClassData


def cp_model(n: int) -> CohModel:
    """CP^(2n+1) with its contact structure: ring Q[x]/(x^(2n+2)),
    c(TX) = (1+x)^(2n+2), c(L) = 1 + 2x, c(D) = c(TX)/c(L).

    >>> total_class(cp_model(1).dist)
    TruncElt(1 + 2*x + 2*x^2)
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    dim = 2 * n + 1
    ring = TruncRing(("x",), (dim,))
    x = ring.gen(0)
    c_tx = (ring.one() + x) ** (dim + 1)
    c_l = ring.one() + x * 2
    c_d = c_tx * c_l.inverse()
    return CohModel(
        ring=ring,
        n=n,
        tx=from_total_class(ring, c_tx, dim),
        line=from_total_class(ring, c_l, 1),
        dist=from_total_class(ring, c_d, 2 * n),
    )


def todd(model: CohModel) -> TruncElt:
    """Todd class of TX, as exp of the genus log-series in power sums."""
    return _genus(model.tx, todd_log_series(model.ring.cap))


def a_hat(model: CohModel) -> TruncElt:
    """A-hat class of TX."""
    return _genus(model.tx, ahat_log_series(model.ring.cap))


def _genus(b: BundleClassData, log_coeffs) -> TruncElt:
    acc = b.ring.zero()
    for m, pm in enumerate(power_sums(b), start=1):
        if m < len(log_coeffs) and log_coeffs[m] != 0:
            acc = acc + pm * log_coeffs[m]
    return acc.exp()


def holomorphic_euler(model: CohModel, spec: BundleSpec) -> int:
    """chi(X, wedge^p/Sym^p D* (x) L^-k) by the index-theorem integral."""
    spec.check_rank(model.n)
    twist = (model.line.c1() * Fraction(-spec.k)).exp()
    integrand = ch_lambda(model.dist, spec.p, spec.variant) * twist * todd(model)
    val = model.ring.integrate(integrand)
    if val.denominator != 1:
        raise NonIntegralResult(
            f"index integral {val} is not an integer for {spec.describe()}"
        )
    return int(val)
