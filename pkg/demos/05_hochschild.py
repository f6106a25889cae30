"""Hochschild complexes, with and without curvature.

Computes HH of the dual numbers (matching the classical two-periodic
answer), sees that matrix algebras only have their centre, and checks
that the curved differential on k[x]/x^4 with curvature x^2 squares to
zero on the truncated complex.
"""

from singlab import (
    CurvedAlgebra,
    HochschildComplexSpec,
    curvature_term_check,
    hochschild_cohomology,
    hochschild_homology,
    validate_curved,
)
from singlab.fields import QQ
from singlab.findim import matrix_algebra, truncated_polynomial_algebra

print("== dual numbers QQ[x]/x^2 ==")
dual = CurvedAlgebra(truncated_polynomial_algebra(QQ, 2), "Z", [0, 0])
spec = HochschildComplexSpec(dual, length_bound=6)
hc = hochschild_cohomology(spec, [0, 1, 2, 3])
print("HH^i dims:", hc.dims)
chain = HochschildComplexSpec(dual, variant="CHAIN", length_bound=6)
print("HH_i dims:", hochschild_homology(chain, [0, 1, 2, 3]))

print()
print("== M_2(QQ): only the centre survives ==")
m2 = CurvedAlgebra(matrix_algebra(QQ, 2), "Z", [0, 0, 0, 0])
hc = hochschild_cohomology(HochschildComplexSpec(m2, length_bound=3), [0, 1])
print("HH^i dims:", hc.dims)
print("HH^0 basis (the scalar matrices):", hc.hh0_basis())

print()
print("== a curved algebra: k[x]/x^4 with curvature x^2 ==")
a4 = truncated_polynomial_algebra(QQ, 4)
h = a4.zero_vector()
h[2] = QQ.one()
curved = CurvedAlgebra(a4, "Z2", [0, 0, 0, 0], curvature=h)
ok, witness = validate_curved(curved)
print("curved algebra axioms hold:", ok)
for variant in ("COCHAIN", "CHAIN"):
    spec = HochschildComplexSpec(curved, variant=variant, length_bound=5)
    print(f"{variant.lower()} differential (with the curvature insertion)"
          f" squares to zero: {curvature_term_check(spec)}")
