"""Build every algebra on the small grid, check it, then break one constant.

Run: python3 demos/jacobi_tour.py
"""
from supergca import build, legal_specs, structure_constants, verify_antisymmetry, verify_super_jacobi
from supergca.core import C, P, with_constant

print(f"{'algebra':40} {'gens':>5} {'consts':>7}  jacobi")
for spec in legal_specs(max_d=2, max_two_ell=3):
    alg = spec.build()
    label = f"{spec.family.value} d={spec.d} 2l={spec.two_ell} {spec.central.value}"
    ok = not verify_antisymmetry(alg) and not verify_super_jacobi(alg)
    print(f"{label:40} {len(alg.generators):5} {len(structure_constants(alg)):7}  {'ok' if ok else 'FAIL'}")

# [C, P(0)] = 2 P(1) in the spin-1 algebra; negating it breaks the sl(2) action on P.
alg = build("gca", 1, 2)
a, b, g, c = next(k for k in structure_constants(alg) if (k[0], k[1]) == (C, P(0, 1)))
print(f"\nflip [{a.label}, {b.label}] -> {g.label}: {c} becomes {-c}")
for v in verify_super_jacobi(with_constant(alg, a, b, g, -c)):
    print("  ", v.describe())
