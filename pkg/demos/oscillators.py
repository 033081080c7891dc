"""Realize the N=2 algebra with mass by quadratics in its ideal, then build oscillators.

Run: python3 demos/oscillators.py
"""
from supergca import (
    BuildSpec, build_oscillator_basis, canonical_relations, fermion_sign, hamiltonian_offset,
    hamiltonian_residual, realize, verify_realization,
)
from supergca.core import D, H

r = realize(BuildSpec("standard", 1, 1, "mass"))
print("H ->", r(H))
print("D ->", r(D))
print("homomorphism violations:", len(verify_realization(r)))

for L in (1, 3):
    basis = build_oscillator_basis(L, 1)
    rel = canonical_relations(basis)
    canonical = all(v == (1 if x == y else 0) for (x, y), v in rel["bb+"].items())
    print(f"\n2l={L}: [b_n, b_m+] = delta_nm: {canonical}, fermion sign s = {fermion_sign(basis)}")
    flipped = build_oscillator_basis(L, 1, flip_fermion_sign=True)
    print(f"      with the sign switch s = {fermion_sign(flipped)}")
    res = hamiltonian_residual(L, 1)
    print(f"      D + 2 Ham + l(l+1/2) d = {res}; exact offset (l^2+1/4) d = {hamiltonian_offset(L, 1)}")
