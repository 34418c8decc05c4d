"""Fixed-point data of circle actions on complex contact manifolds.

A manifold of complex dimension 2n+1 with contact distribution D and
quotient line bundle L = TX/D is represented here only through its
circle-action fingerprint: a list of isolated fixed points, each carrying
the 2n+1 integer tangent weights.  The validator enforces the arithmetic
every contact-preserving circle action must satisfy at an isolated fixed
point:

* the sum of the tangent weights is divisible by n+1, and the quotient h
  is the weight of L there;
* h is nonzero and occurs among the tangent weights (the contact
  direction);
* once one copy of h is removed, the remaining 2n weights pair off under
  an involution sigma with m + sigma(m) = h;
* the 2n distribution weights sum to n*h.

Data that fails any of these cannot arise from a contact-preserving
circle action with isolated fixed points, and the report pinpoints the
offending point and rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class NonIntegralH(ValueError):
    """Tangent weight sum not divisible by n+1."""


class NoContactWeight(ValueError):
    """The L-weight h does not occur among the tangent weights."""


class NoSigmaPairing(ValueError):
    """Distribution weights are not symmetric about h/2."""


class NotIsolated(ValueError):
    """A zero tangent weight: the fixed component is positive-dimensional."""


@dataclass(frozen=True)
class FixedPoint:
    """An isolated fixed point with its 2n+1 integer tangent weights."""

    label: str
    tangent_weights: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "tangent_weights", tuple(int(w) for w in self.tangent_weights)
        )


@dataclass(frozen=True)
class ContactFixedData:
    """Named fixed-point dataset; the distribution has rank 2n."""

    name: str
    n: int
    points: tuple

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))

    def dim(self) -> int:
        return 2 * self.n + 1


@dataclass(frozen=True)
class ContactPointDecomp:
    """One point's weights split into the L-weight h and paired D-weights.

    ``sigma`` is an involution on indices into ``d_weights`` with
    d_weights[i] + d_weights[sigma[i]] = h; fixed indices carry weight h/2.
    """

    h: int
    d_weights: tuple
    sigma: tuple


@dataclass(frozen=True)
class Violation:
    point: str
    code: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid

    def codes(self):
        return [v.code for v in self.violations]


def infer_h(pt: FixedPoint, n: int) -> int:
    """Weight of L at the point: (sum of tangent weights) / (n+1)."""
    total = sum(pt.tangent_weights)
    if total % (n + 1) != 0:
        raise NonIntegralH(
            f"point {pt.label!r}: weight sum {total} not divisible by {n + 1}"
        )
    return total // (n + 1)


def decompose(pt: FixedPoint, n: int) -> ContactPointDecomp:
    """Split tangent weights into the contact weight h and sigma-paired D-weights.

    Deterministic: D-weights are sorted and the pairing is built greedily,
    matching each unpaired weight w with the smallest available h - w.
    Any valid pairing is as good as any other; nothing downstream consumes
    sigma beyond its existence.
    """
    h = infer_h(pt, n)
    weights = sorted(pt.tangent_weights)
    if h == 0:
        # h = 0 could only occur on a positive-dimensional component
        raise NoContactWeight(f"point {pt.label!r}: contact weight is zero")
    if h not in weights:
        raise NoContactWeight(
            f"point {pt.label!r}: contact weight {h} absent from tangent weights"
        )
    d = list(weights)
    d.remove(h)
    sigma = [-1] * len(d)
    for i, w in enumerate(d):
        if sigma[i] >= 0:
            continue
        partner = None
        for j in range(i + 1, len(d)):
            if sigma[j] < 0 and d[j] == h - w:
                partner = j
                break
        if partner is None:
            if 2 * w == h:
                sigma[i] = i  # central weight h/2 pairs with itself
                continue
            raise NoSigmaPairing(
                f"point {pt.label!r}: weight {w} has no partner {h - w}"
            )
        sigma[i] = partner
        sigma[partner] = i
    return ContactPointDecomp(h=h, d_weights=tuple(d), sigma=tuple(sigma))


def validate(data: ContactFixedData) -> ValidationReport:
    """Check every point against the contact identities; empty report = valid."""
    violations = []

    def bad(point, code, message):
        violations.append(Violation(point=point, code=code, message=message))

    if data.n < 1:
        bad("*", "bad_n", f"n must be a positive integer, got {data.n}")
        return ValidationReport(tuple(violations))
    if not data.points:
        bad("*", "no_points", "dataset has no fixed points")
        return ValidationReport(tuple(violations))

    expected = 2 * data.n + 1
    for pt in data.points:
        if len(pt.tangent_weights) != expected:
            bad(
                pt.label,
                "wrong_arity",
                f"expected {expected} tangent weights, got {len(pt.tangent_weights)}",
            )
            continue
        if any(w == 0 for w in pt.tangent_weights):
            bad(pt.label, "not_isolated", "zero tangent weight: fixed component "
                "is positive-dimensional, unsupported by this engine")
            continue
        try:
            decomp = decompose(pt, data.n)
        except NonIntegralH as exc:
            bad(pt.label, "non_integral_h", str(exc))
            continue
        except NoContactWeight as exc:
            bad(pt.label, "no_contact_weight", str(exc))
            continue
        except NoSigmaPairing as exc:
            bad(pt.label, "no_sigma_pairing", str(exc))
            continue
        if sum(decomp.d_weights) != data.n * decomp.h:
            bad(
                pt.label,
                "d_sum_mismatch",
                f"distribution weights sum to {sum(decomp.d_weights)}, "
                f"expected {data.n * decomp.h}",
            )
    return ValidationReport(tuple(violations))


# JSON schema: {"name": str, "n": int, "points":
#               [{"label": str, "tangent_weights": [int, ...]}]}

def to_json_dict(data: ContactFixedData) -> dict:
    return {
        "name": data.name,
        "n": data.n,
        "points": [
            {"label": pt.label, "tangent_weights": list(pt.tangent_weights)}
            for pt in data.points
        ],
    }


def from_json_dict(obj: dict) -> ContactFixedData:
    if not isinstance(obj, dict):
        raise ValueError("top level must be a JSON object")
    try:
        name = obj["name"]
        n = obj["n"]
        raw_points = obj["points"]
    except KeyError as exc:
        raise ValueError(f"missing key {exc.args[0]!r}") from None
    if not isinstance(name, str):
        raise ValueError("'name' must be a string")
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("'n' must be an integer")
    if not isinstance(raw_points, list):
        raise ValueError("'points' must be a list")
    points = []
    for i, rp in enumerate(raw_points):
        if not isinstance(rp, dict):
            raise ValueError(f"point #{i} must be an object")
        label = rp.get("label")
        weights = rp.get("tangent_weights")
        if not isinstance(label, str):
            raise ValueError(f"point #{i}: 'label' must be a string")
        if not isinstance(weights, list) or not all(
            isinstance(w, int) and not isinstance(w, bool) for w in weights
        ):
            raise ValueError(f"point {label!r}: 'tangent_weights' must be a "
                             "list of integers")
        points.append(FixedPoint(label=label, tangent_weights=tuple(weights)))
    return ContactFixedData(name=name, n=n, points=tuple(points))
