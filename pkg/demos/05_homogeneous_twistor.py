#!/usr/bin/env python3
"""A nine-dimensional homogeneous example: SO(8)/(SO(4) x U(2)).

This is the twistor space of the real 4-plane Grassmannian, a complex
contact manifold with n = 4.  A generic circle in the maximal torus has
24 isolated fixed points, one per root of so(8); the fixture ships the
tangent weights for the cocharacter (4, 3, 2, 1).

The interesting value: chi(Sym^2 D* (x) L^-1) = 1.  Under a circle action
with all-nonnegative weights the symmetric-power certificates would force
this index to vanish, so no such action exists on this space -- a
geometric conclusion read off from pure weight arithmetic.
"""

from pathlib import Path

from contactindex import BundleSpec, equivariant_index, load_fixture, validate

fixture = Path(__file__).resolve().parent.parent / "fixtures" / "so8_so4xu2.json"
data = load_fixture(fixture)

print(f"dataset: {data.name}, n = {data.n}, {len(data.points)} fixed points")
report = validate(data)
print(f"contact identities: {'all satisfied' if report.valid else report.violations}")

for variant, p, k in [("ext", 0, 0), ("sym", 2, 1), ("sym", 2, 0)]:
    spec = BundleSpec(variant, p, k)
    idx = equivariant_index(data, spec)
    print(f"  chi({spec.describe():>22}) = {idx.value}  [{idx.classification}]")

print()
print("chi(Sym^2 D* (x) L^-1) = 1 != 0, so this manifold admits no")
print("contact circle action whose weights are all nonnegative.")
