#!/usr/bin/env python3
"""Draw the admissible (k, p) region for a rank-10 distribution (n = 5).

Rows show p = 2n down to 0.  '#' marks cells where the index provably
vanishes, '+' where it is provably constant (possibly nonzero), '.'
where nothing is guaranteed.  The staircase for p > n mirrors the upper
band through the bundle identity
wedge^p D* (x) L^-k ~ wedge^(2n-p) D* (x) L^-(k+p-n).
"""

from contactindex import grid_ascii, region_grid

for variant in ("ext", "sym"):
    print(f"variant = {variant}, n = 5")
    print(grid_ascii(region_grid(5, variant)))
