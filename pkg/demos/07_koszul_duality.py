"""Bar and cobar constructions and the Koszul dual algebra.

The dual of the bar construction of the dual numbers is a power series
ring on one generator; the counit of the bar-cobar adjunction recovers
the algebra in degree zero; and linear duality swaps truncated
polynomial algebras with deconcatenation-style coalgebras on the nose.
"""

from singlab import (
    AugmentedAlgebra,
    bar,
    bar_coalgebra,
    cobar,
    counit_h0_check,
    dual_algebra,
    dual_coalgebra,
    koszul_dual_cohomology,
)
from singlab.fields import QQ
from singlab.findim import truncated_polynomial_algebra

print("== A = QQ[eps]/eps^2 with eps in degree 0 ==")
aug = AugmentedAlgebra(truncated_polynomial_algebra(QQ, 2), [0, 0])
bc = bar(aug, 6)
print("bar piece dims:", {n: len(p.basis) for n, p in bc.pieces.items()})
kd = koszul_dual_cohomology(aug, 6, [0, 1, 2, 3, 4])
print("A^! dims per degree (a power series ring on one x):", kd.dims)
x = kd.functional(1, 0)
power = x
for n in range(2, 5):
    power = kd.convolve(power, x, g_degree=1)
    print(f"x^{n} is nonzero in cohomology:", any(kd.class_of(power, n)))

print()
print("== the counit Omega B A -> A ==")
for size in (2, 3):
    a = AugmentedAlgebra(truncated_polynomial_algebra(QQ, size), [0] * size)
    print(f"QQ[eps]/eps^{size}: H^0(Omega B A) = A and ker(counit) = im(d):",
          counit_h0_check(a, 6))

print()
print("== finite-dimensional duality ==")
poly4 = AugmentedAlgebra(truncated_polynomial_algebra(QQ, 4), [0, 0, 0, 0])
co = dual_coalgebra(poly4)
print("dual coalgebra is conilpotent:", co.check_conilpotent())
print("double dual recovers the structure constants:",
      dual_algebra(co).algebra.mult == poly4.algebra.mult)
om = cobar(bar_coalgebra(bar(aug, 4)), 4)
print("cobar of the bar coalgebra has",
      len(om.words), "words within total weight 4")
