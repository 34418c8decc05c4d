"""Circle characters of the bundles entering the index computations.

A character is the weight multiset of a representation: weight w
contributes the monomial z^w to the trace.  The bundles of interest are
the exterior and symmetric powers of the dual contact distribution D*
twisted by powers of the quotient line bundle L.

Sign conventions, anchored by the known Euler characteristics on the
projective-space fixture: D* carries the negated D-weights and L^-k
contributes -k*h.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .contact import ContactPointDecomp

EXTERIOR = "exterior"
SYM = "sym"

_ALIASES = {"ext": EXTERIOR, "exterior": EXTERIOR, "sym": SYM, "symmetric": SYM}


class InvalidSpec(ValueError):
    """Bundle selection outside the allowed range."""


@dataclass(frozen=True)
class BundleSpec:
    """Selects wedge^p D* (x) L^-k or Sym^p D* (x) L^-k."""

    variant: str
    p: int
    k: int

    def __post_init__(self):
        v = _ALIASES.get(self.variant)
        if v is None:
            raise InvalidSpec(f"unknown variant {self.variant!r}")
        object.__setattr__(self, "variant", v)
        if self.p < 0:
            raise InvalidSpec(f"power p must be nonnegative, got {self.p}")

    def check_rank(self, n: int):
        """Exterior powers above the rank 2n of D are empty; reject them."""
        if self.variant == EXTERIOR and self.p > 2 * n:
            raise InvalidSpec(f"exterior power p={self.p} exceeds rank {2 * n}")

    def describe(self) -> str:
        op = "wedge" if self.variant == EXTERIOR else "sym"
        return f"{op}^{self.p} D* (x) L^-{self.k}"


def char_exterior(d_weights, p: int) -> tuple:
    """Weights of wedge^p D*: -(sum) over all p-subsets of the D-weights."""
    if p < 0 or p > len(d_weights):
        raise InvalidSpec(f"exterior power p={p} outside [0, {len(d_weights)}]")
    return tuple(sorted(-sum(sub) for sub in combinations(d_weights, p)))


def char_sym(d_weights, p: int) -> tuple:
    """Weights of Sym^p D*: -(sum) over all size-p multisets of the D-weights."""
    if p < 0:
        raise InvalidSpec(f"symmetric power p={p} is negative")
    return tuple(
        sorted(-sum(sub) for sub in combinations_with_replacement(d_weights, p))
    )


def char_bundle(decomp: ContactPointDecomp, spec: BundleSpec) -> tuple:
    """Weights of the selected power of D* twisted by L^-k at one point."""
    if spec.variant == EXTERIOR:
        base = char_exterior(decomp.d_weights, spec.p)
    else:
        base = char_sym(decomp.d_weights, spec.p)
    shift = -spec.k * decomp.h
    return tuple(sorted(w + shift for w in base))
