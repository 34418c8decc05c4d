#!/usr/bin/env python3
"""Scan a whole (p, k) grid and compare against the guaranteed region.

For any contact-preserving circle action, the index of
wedge^p D* (x) L^-k is constant in z when (p, k) lies in the admissible
band, and vanishes strictly inside it.  Outside the band anything can
happen.  The scan classifies every cell from the fixed-point data alone;
the region module knows the closed-form inequalities.  They must agree.
"""

from contactindex import INTERIOR, OUTSIDE, projectivized_cotangent, region_grid, scan

data = projectivized_cotangent((0, 1, 3, 7))
n = data.n
print(f"dataset: {data.name} (n = {n}, {len(data.points)} fixed points)")

cells = region_grid(n, "ext")
status = {(c.p, c.k): c.status for c in cells}
klo = min(c.k for c in cells)
khi = max(c.k for c in cells)
rows = scan(data, range(0, 2 * n + 1), range(klo, khi + 1), "ext")

print(f"scanning p = 0..{2 * n}, k = {klo}..{khi}\n")
print("  p  k  region    classification   value  certificate")
for r in rows:
    st = status[(r.p, r.k)]
    val = "" if r.value is None else str(r.value)
    marker = ""
    if st == INTERIOR and r.classification != "Vanishing":
        marker = "  <-- THEOREM VIOLATION"
    print(f" {r.p:>2} {r.k:>2}  {st:<9} {r.classification:<16} {val:>5}  {r.verdict}{marker}")

in_region = [r for r in rows if status[(r.p, r.k)] != OUTSIDE]
nonconst = [r for r in in_region if r.classification == "NonConstant"]
print(f"\n{len(in_region)} cells in the admissible region, "
      f"{len(nonconst)} non-constant (must be 0).")
