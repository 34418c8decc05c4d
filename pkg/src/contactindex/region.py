"""The admissible (k, p) rectangle of guaranteed rigidity and vanishing.

For the exterior powers the index of wedge^p D* (x) L^-k is constant in z
whenever

    0     <= k <= n+1-p   for 0   <= p <= n,
    n - p <= k <= 1       for n+1 <= p <= 2n,

and vanishes when k lies strictly inside the interval.  For symmetric
powers (under an all-nonnegative-weights hypothesis on the data) the
interval is 0 <= k <= n+1-p for 0 <= p <= n.  Cells on the interval ends
are "Boundary" (rigid, possibly nonzero), cells strictly inside are
"Interior" (vanishing), anything else is "Outside".
"""

from __future__ import annotations

from dataclasses import dataclass
from io import StringIO

from .characters import EXTERIOR, SYM, _ALIASES

INTERIOR = "Interior"
BOUNDARY = "Boundary"
OUTSIDE = "Outside"


class OutOfRangeP(ValueError):
    """p outside the rows covered by the statement."""


@dataclass(frozen=True)
class RegionCell:
    p: int
    k: int
    status: str


def _variant(variant: str) -> str:
    v = _ALIASES.get(variant)
    if v is None:
        raise ValueError(f"unknown variant {variant!r}")
    return v


def k_interval(n: int, p: int, variant: str = EXTERIOR) -> tuple:
    """Closed interval [k_min, k_max] of guaranteed rigidity for row p."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    v = _variant(variant)
    if v == EXTERIOR:
        if 0 <= p <= n:
            return (0, n + 1 - p)
        if n + 1 <= p <= 2 * n:
            return (n - p, 1)
        raise OutOfRangeP(f"p={p} outside [0, {2 * n}]")
    if 0 <= p <= n:
        return (0, n + 1 - p)
    raise OutOfRangeP(f"p={p} outside [0, {n}] for symmetric powers")


def cell_status(n: int, p: int, k: int, variant: str = EXTERIOR) -> str:
    kmin, kmax = k_interval(n, p, variant)
    if kmin < k < kmax:
        return INTERIOR
    if k == kmin or k == kmax:
        return BOUNDARY
    return OUTSIDE


def region_grid(n: int, variant: str = EXTERIOR) -> list:
    """All cells for p in range and k spanning the region plus one cell of
    margin on each side; sorted by (p, k)."""
    v = _variant(variant)
    p_max = 2 * n if v == EXTERIOR else n
    intervals = {p: k_interval(n, p, v) for p in range(p_max + 1)}
    k_lo = min(lo for lo, _ in intervals.values()) - 1
    k_hi = max(hi for _, hi in intervals.values()) + 1
    return [
        RegionCell(p=p, k=k, status=cell_status(n, p, k, v))
        for p in range(p_max + 1)
        for k in range(k_lo, k_hi + 1)
    ]


def grid_csv(cells) -> str:
    out = StringIO()
    out.write("p,k,status\n")
    for cell in sorted(cells, key=lambda c: (c.p, c.k)):
        out.write(f"{cell.p},{cell.k},{cell.status}\n")
    return out.getvalue()


_GLYPH = {INTERIOR: "#", BOUNDARY: "+", OUTSIDE: "."}


def grid_ascii(cells) -> str:
    """Terminal rendering: rows are p descending, columns k ascending."""
    by_row = {}
    for cell in cells:
        by_row.setdefault(cell.p, {})[cell.k] = cell.status
    ks = sorted({cell.k for cell in cells})
    width = max(len(str(k)) for k in ks)
    out = StringIO()
    for p in sorted(by_row, reverse=True):
        row = "".join(_GLYPH[by_row[p].get(k, OUTSIDE)] for k in ks)
        out.write(f"p={p:>2} {row}\n")
    out.write(f"   k: {ks[0]} .. {ks[-1]}   (# interior, + boundary, . outside)\n")
    return out.getvalue()
