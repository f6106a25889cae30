"""Noncommutative deformations of Kleinian singularities, and Drinfeld
derived quotients.

The singularity category of a deformation splits into blocks indexed by
the connected components of the zero-weight part of the Dynkin diagram;
each block is again Kleinian, with its polynomial read off the ADE table.
The Drinfeld quotient machinery computes stable Ext groups from a
noncommutative resolution.
"""

import json

from singlab import (
    derived_preprojective,
    drinfeld_cohomology,
    drinfeld_quotient,
    dsg_blocks,
    extended_dynkin,
    preprojective_relations,
    truncated_algebra_dim,
)
from singlab.fields import QQ, GaussianRational
from singlab.findim import (
    endomorphism_algebra,
    idempotent_from_projection,
    truncated_polynomial_algebra,
)
from singlab.linalg import ExactMatrix

print("== preprojective algebras ==")
a2 = extended_dynkin("A2")
dq, rels = preprojective_relations(a2)
print("Pi(A~2) truncated dims:", truncated_algebra_dim(dq, rels, 4))
dg = derived_preprojective(a2)
print("H^0 of the derived version, same truncation:",
      dg.h0_truncated_dims(4))

print()
print("== block decompositions ==")
for label, lam in (
    ("A3", [0, 1, 0]),
    ("D5", [0, 0, 0, 0, 0]),
    ("E6", [0, 0, GaussianRational(0, 1), 0, 0, 0]),
):
    report = dsg_blocks(label, lam)
    print(f"type {label}, weights {lam}:")
    print("   ", json.dumps(report.to_json()))

print()
print("== Drinfeld quotients ==")
dual = truncated_polynomial_algebra(QQ, 2)
acyclic = drinfeld_quotient(dual, dual.unit_vector(), 7)
print("A<h> for e = 1 is acyclic:",
      drinfeld_cohomology(acyclic, [0, -1, -2, -3, -4]))

# End_R(R + k) for R = QQ[x]/x^2 computes stable self-Ext of k
x_action = ExactMatrix.from_rows(QQ, [[0, 0, 0], [1, 0, 0], [0, 0, 0]])
alg, mats = endomorphism_algebra(QQ, [x_action], 3)
e = idempotent_from_projection(alg, mats, 3, [0, 1])
quotient = drinfeld_quotient(alg, e, 7)
print("stable Ext^j(k, k) over QQ[x]/x^2 from the derived quotient:",
      drinfeld_cohomology(quotient, [0, -1, -2, -3, -4]))
