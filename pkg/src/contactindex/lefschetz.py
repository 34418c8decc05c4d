"""Equivariant index engine via fixed-point localization.

The equivariant holomorphic Euler characteristic of a bundle from
:class:`~contactindex.characters.BundleSpec` is assembled as an exact sum
of local terms, one per isolated fixed point:

    sum over character weights w of z^w
    -----------------------------------
    product over tangent weights m of (1 - z^-m)

The sum of these rational functions must collapse to a Laurent polynomial
with integer coefficients; failure to do so signals fixed-point data that
does not belong to a genuine manifold and raises NotPolynomial.

The limit certificates reproduce the boundedness bookkeeping that proves
rigidity: a term z^w / prod(1 - z^-m) stays bounded as z -> 0 iff
w >= -sum of the positive tangent weights, and as z -> infinity iff
w <= sum of |negative tangent weights|.  If every term of every point is
bounded at both ends the index is constant; if moreover every term tends
to zero at one common end, the index vanishes identically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import BundleSpec, InvalidSpec, char_bundle
from .contact import ContactFixedData, decompose
from .laurent import LaurentPoly, one_minus_z
from .ratfunc import NotPolynomial, RationalFn

VANISHING = "Vanishing"
RIGID_NONZERO = "RigidNonzero"
NON_CONSTANT = "NonConstant"

UNBOUNDED = "Unbounded"
BOUNDED = "Bounded"
STRICTLY_VANISHING = "StrictlyVanishing"


class NonIntegralCoefficient(ArithmeticError):
    """A localization sum with non-integer coefficients; impossible for
    genuine index data, so it signals a bug or corrupted input."""


@dataclass(frozen=True)
class EquivariantIndex:
    """Laurent-polynomial index with its rigidity classification."""

    laurent: LaurentPoly
    classification: str

    @property
    def value(self):
        """The constant index value, or None when z-dependent."""
        if self.classification == VANISHING:
            return 0
        if self.classification == RIGID_NONZERO:
            return int(self.laurent.coeff(0))
        return None

    def at_one(self) -> int:
        """The plain (non-equivariant) Euler characteristic."""
        return int(self.laurent.at_one())


def classify(laurent: LaurentPoly) -> EquivariantIndex:
    if not laurent.is_integral():
        raise NonIntegralCoefficient(f"non-integer coefficients in {laurent}")
    if laurent.is_zero():
        kind = VANISHING
    elif laurent.is_constant():
        kind = RIGID_NONZERO
    else:
        kind = NON_CONSTANT
    return EquivariantIndex(laurent=laurent, classification=kind)


def point_term(decomp, spec: BundleSpec, tangent_weights) -> RationalFn:
    """Local Lefschetz term of one isolated fixed point."""
    num = LaurentPoly.zero()
    for w in char_bundle(decomp, spec):
        num = num + LaurentPoly.monomial(w)
    den = LaurentPoly.one()
    for m in tangent_weights:
        den = den * one_minus_z(-m)
    return RationalFn(num, den)


def equivariant_index(data: ContactFixedData, spec: BundleSpec) -> EquivariantIndex:
    """Exact equivariant index of the selected bundle over the dataset.

    Expects data that passes :func:`contactindex.contact.validate`;
    contact-identity failures surface as decomposition errors here.
    """
    spec.check_rank(data.n)
    total = RationalFn.zero()
    for pt in data.points:
        decomp = decompose(pt, data.n)
        total = total + point_term(decomp, spec, pt.tangent_weights)
    return classify(total.to_laurent())


@dataclass(frozen=True)
class TermLimit:
    """Order bounds of one character term at one fixed point."""

    point: str
    weight: int
    ord_at_zero: int
    deg_at_infinity: int

    @property
    def bounded_at_0(self) -> bool:
        return self.ord_at_zero >= 0

    @property
    def bounded_at_inf(self) -> bool:
        return self.deg_at_infinity <= 0

    @property
    def strict_at_0(self) -> bool:
        return self.ord_at_zero > 0

    @property
    def strict_at_inf(self) -> bool:
        return self.deg_at_infinity < 0


@dataclass(frozen=True)
class LimitCertificate:
    """Per-term limit bookkeeping with the aggregated verdict.

    Verdict semantics (sound, not complete):
    Bounded            -> the index is constant in z;
    StrictlyVanishing  -> the index is identically zero.
    """

    terms: tuple
    bounded_at_0: bool
    bounded_at_inf: bool
    strict_at_0: bool
    strict_at_inf: bool
    verdict: str


def certificate(data: ContactFixedData, spec: BundleSpec) -> LimitCertificate:
    """Limit certificate for every character term of every fixed point."""
    spec.check_rank(data.n)
    terms = []
    for pt in data.points:
        decomp = decompose(pt, data.n)
        pos = sum(m for m in pt.tangent_weights if m > 0)
        neg = sum(-m for m in pt.tangent_weights if m < 0)
        for w in char_bundle(decomp, spec):
            # ord/deg of z^w / prod(1 - z^-m): the denominator's lowest
            # exponent is -pos and its highest is +neg
            terms.append(
                TermLimit(
                    point=pt.label,
                    weight=w,
                    ord_at_zero=w + pos,
                    deg_at_infinity=w - neg,
                )
            )
    terms = tuple(terms)
    b0 = all(t.bounded_at_0 for t in terms)
    binf = all(t.bounded_at_inf for t in terms)
    s0 = all(t.strict_at_0 for t in terms)
    sinf = all(t.strict_at_inf for t in terms)
    if not (b0 and binf):
        verdict = UNBOUNDED
    elif s0 or sinf:
        verdict = STRICTLY_VANISHING
    else:
        verdict = BOUNDED
    return LimitCertificate(
        terms=terms,
        bounded_at_0=b0,
        bounded_at_inf=binf,
        strict_at_0=s0,
        strict_at_inf=sinf,
        verdict=verdict,
    )


@dataclass(frozen=True)
class ScanRow:
    """One (p, k) cell of a scan: classification plus certificate verdict."""

    p: int
    k: int
    classification: str | None = None
    value: int | None = None
    verdict: str | None = None
    error: str | None = None


def scan(data: ContactFixedData, p_range, k_range, variant: str) -> list:
    """Classify and certify every (p, k) cell; errors are recorded in-row."""
    rows = []
    for p in sorted(set(p_range)):
        for k in sorted(set(k_range)):
            try:
                spec = BundleSpec(variant=variant, p=p, k=k)
                spec.check_rank(data.n)
                idx = equivariant_index(data, spec)
                cert = certificate(data, spec)
            except (InvalidSpec, NotPolynomial, NonIntegralCoefficient) as exc:
                rows.append(
                    ScanRow(p=p, k=k, error=f"{type(exc).__name__}: {exc}")
                )
                continue
            rows.append(
                ScanRow(
                    p=p,
                    k=k,
                    classification=idx.classification,
                    value=idx.value,
                    verdict=cert.verdict,
                )
            )
    return rows
