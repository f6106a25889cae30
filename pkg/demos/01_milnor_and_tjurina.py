"""Milnor and Tjurina numbers of hypersurface germs.

Walks the A_n family x^2 + y^2 + z^{n+1}, where both invariants agree
because the polynomials are quasi-homogeneous, then shows a plane curve
where the Tjurina number is strictly smaller.
"""

from singlab import (
    Ring,
    format_poly,
    is_quasi_homogeneous,
    milnor_algebra,
    parse_poly,
    tjurina_algebra,
)

ring = Ring(("x", "y", "z"))

print("== the A_n family ==")
for n in range(1, 6):
    sigma = parse_poly(ring, f"x^2 + y^2 + z^{n + 1}")
    qb, mu = milnor_algebra(sigma)
    _, tau = tjurina_algebra(sigma)
    monos = ", ".join(format_poly(ring.monomial(e)) for e in qb.monomials)
    print(f"A_{n}: mu = {mu}, tau = {tau}, Milnor algebra basis {{{monos}}}")

print()
print("== a non-quasi-homogeneous curve ==")
plane = Ring(("x", "y"))
sigma = parse_poly(plane, "x^5 + y^5 + x^3*y^3")
flag, _ = is_quasi_homogeneous(sigma, (1, 1))
print(f"sigma = {format_poly(sigma)}; quasi-homogeneous for weights (1,1)? {flag}")
_, mu = milnor_algebra(sigma)
_, tau = tjurina_algebra(sigma)
print(f"mu = {mu}, tau = {tau}  (tau < mu detects the failure of Euler's identity)")
