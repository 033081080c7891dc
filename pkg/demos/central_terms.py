"""Solve for central terms in the N=2 algebra and show they are all removable.

Run: python3 demos/central_terms.py
"""
from supergca import solve_and_certify

for L in range(1, 5):
    cert = solve_and_certify(L)
    print(f"2l={L}: {cert.rows} constraints on {cert.cols} unknowns, rank {cert.rank}, "
          f"nullity {cert.nullity}, verdict {cert.verdict}")
    for red in cert.redefinitions:
        moves = ", ".join(f"{g.label} += {c} K" for g, c in red.shift.items())
        print(f"    [{red.method}] {moves}")
