#!/usr/bin/env python3
"""The mechanism behind rigidity: limits at z = 0 and z = infinity.

Each fixed point contributes a term z^w / prod(1 - z^-m).  If every term
of every point stays bounded at both ends of the z-line, the total -- a
Laurent polynomial -- must be constant; if on top of that all terms tend
to zero at one common end, the constant is zero.  The certificate records
the exact order of each term at both ends, so the conclusion is a finite
check, not an estimate.
"""

from contactindex import BundleSpec, certificate, cp_twistor, equivariant_index

data = cp_twistor((1, 2))

for p, k in [(0, 0), (0, 1), (0, 3)]:
    spec = BundleSpec("ext", p, k)
    cert = certificate(data, spec)
    idx = equivariant_index(data, spec)
    print(f"wedge^{p} D* (x) L^-{k}:  verdict {cert.verdict}, "
          f"index = {idx.laurent} ({idx.classification})")
    for t in cert.terms:
        state0 = "zero" if t.strict_at_0 else ("bounded" if t.bounded_at_0 else "POLE")
        stateinf = "zero" if t.strict_at_inf else ("bounded" if t.bounded_at_inf else "POLE")
        print(f"    point {t.point:>6}  z^{t.weight:<3} ord_0 = {t.ord_at_zero:>3} ({state0:<7})"
              f"  deg_inf = {t.deg_at_infinity:>3} ({stateinf})")
    print()

print("Bounded everywhere       => the index cannot depend on z.")
print("All zero at a common end => the constant must be 0.")
print("Any pole                 => no conclusion; the index may genuinely vary.")
