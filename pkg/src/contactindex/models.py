"""Generators for the standard families of contact fixed-point data.

Two families are built constructively from linear-action weights, and a
loader reads hand-built datasets from JSON files.  Generator recipes are
not trusted: every output is passed through the contact validator, so a
recipe bug surfaces structurally instead of corrupting downstream sums.
"""

from __future__ import annotations

import json
import os

from .contact import (
    ContactFixedData,
    FixedPoint,
    ValidationReport,
    from_json_dict,
    to_json_dict,
    validate,
)


class DegenerateWeights(ValueError):
    """Generator weights that do not give isolated fixed points."""


class ParseError(ValueError):
    """Fixture file is not valid JSON of the expected shape."""


class ValidationFailed(ValueError):
    """Fixture parsed but failed contact validation."""

    def __init__(self, report: ValidationReport):
        self.report = report
        lines = "; ".join(f"{v.point}: {v.message}" for v in report.violations)
        super().__init__(f"contact validation failed: {lines}")


def _validated(data: ContactFixedData) -> ContactFixedData:
    report = validate(data)
    if not report.valid:
        raise ValidationFailed(report)
    return data


def cp_twistor(a, name: str | None = None) -> ContactFixedData:
    """Projective space CP^(2n+1) as a twistor space, with a circle action.

    The circle acts on the 2n+2 homogeneous coordinates with the signed
    weights (a_0, ..., a_n, -a_0, ..., -a_n); these must be pairwise
    distinct so that the fixed points (the coordinate lines) are isolated.
    The fixed point over weight w_i has tangent weights {w_j - w_i : j != i}.

    >>> cp_twistor((1, 2)).points[0].tangent_weights
    (1, -2, -3)
    """
    a = tuple(int(x) for x in a)
    if len(a) < 2:
        raise DegenerateWeights("need at least two weights (n >= 1)")
    signed = list(a) + [-x for x in a]
    if len(set(signed)) != len(signed):
        raise DegenerateWeights(
            f"signed weights {signed} are not pairwise distinct"
        )
    n = len(a) - 1
    points = tuple(
        FixedPoint(
            label=f"w={w}",
            tangent_weights=tuple(v - w for v in signed if v != w),
        )
        for w in signed
    )
    label = name or f"cp{2 * n + 1}_twistor{a}"
    return _validated(ContactFixedData(name=label, n=n, points=points))


def projectivized_cotangent(b, name: str | None = None) -> ContactFixedData:
    """The projectivized cotangent bundle of CP^m, with a circle action.

    The circle acts on CP^m with pairwise distinct coordinate weights
    b_0, ..., b_m; fixed points upstairs are indexed by ordered pairs
    (i, j), i != j, combining the base directions {b_l - b_i : l != i}
    with the fiber directions {b_j - b_k : k != i, j}.  The contact
    dimension is 2n+1 = 2m-1, so n = m-1.

    >>> sorted(projectivized_cotangent((0, 1, 3)).points[0].tangent_weights)
    [-2, 1, 3]
    """
    b = tuple(int(x) for x in b)
    m = len(b) - 1
    if m < 2:
        raise DegenerateWeights("need at least three weights (m >= 2)")
    if len(set(b)) != len(b):
        raise DegenerateWeights(f"weights {b} are not pairwise distinct")
    points = []
    for i in range(m + 1):
        for j in range(m + 1):
            if i == j:
                continue
            base = [b[l] - b[i] for l in range(m + 1) if l != i]
            fiber = [b[j] - b[k] for k in range(m + 1) if k not in (i, j)]
            points.append(
                FixedPoint(
                    label=f"({i},{j})",
                    tangent_weights=tuple(base + fiber),
                )
            )
    label = name or f"pt_cp{m}_cotangent{b}"
    return _validated(
        ContactFixedData(name=label, n=m - 1, points=tuple(points))
    )


def load_fixture(path) -> ContactFixedData:
    """Read and validate a fixed-point dataset from a JSON file.

    Unknown top-level keys (e.g. a "comment" documenting how the data was
    derived) are ignored.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read fixture {os.fspath(path)!r}: {exc}") from exc
    try:
        data = from_json_dict(obj)
    except ValueError as exc:
        raise ParseError(f"fixture {os.fspath(path)!r}: {exc}") from exc
    return _validated(data)


def save_fixture(data: ContactFixedData, path, comment: str | None = None):
    """Serialize a dataset to the JSON fixture schema."""
    obj = to_json_dict(data)
    if comment:
        obj["comment"] = comment
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")
