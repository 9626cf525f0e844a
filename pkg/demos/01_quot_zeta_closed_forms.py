"""Quot zeta numerators of the y^2 = x^n germs, step by step.

The germ y^2 = x^{2m+1} (the "cusp", one branch) and y^2 = x^{2m} (the "node",
two branches) both have NZ_{R^d}(t) given by finite sums of Hall polynomials
over partitions in a d-by-m box.  This script computes them, reproduces the
published tables, and checks the functional equation by hand on one example.
"""

from singzeta import (SingularityFamily, nz_node_free, nz_cusp_free,
                      nz_cusp_normalization, full_z, funceq_check,
                      specialize, LaurentPoly2, Q)
from singzeta.tables import table_text

print("NZ for the node (y^2 = x^2), rank 1..3:")
for d in (1, 2, 3):
    print("  d=%d:" % d, nz_node_free(1, d).grouped_str())

print("\nThe cusp numerator is the normalization one at t -> t^2:")
print("  normalization, m=2 d=1:", nz_cusp_normalization(2, 1))
print("  free module,   m=2 d=1:", nz_cusp_free(2, 1))

print("\nFull zeta function Z = NZ/(t;q)_d^s, node m=1 d=1 (point counts):")
for j, c in enumerate(full_z(nz_node_free(1, 1), 2, 1, 5)):
    print("  #Quot of colength %d = %s" % (j, c))

print("\nFunctional equation NZ(t) = (q^{d^2} t^{2d})^m NZ(q^-d t^-1):")
p = nz_node_free(1, 1)
flipped = p.substitute(Q, LaurentPoly2.monomial(1, -1, -1))
print("  NZ(1/(qt)) =", flipped)
print("  q t^2 * that =", LaurentPoly2.monomial(1, 1, 2) * flipped)
for kind in ("cusp", "node"):
    for d in (1, 2, 3):
        print(" ", funceq_check(SingularityFamily(kind, 2), d))

print("\nEuler-characteristic specializations (q = 1):")
print("  cusp m=2 d=2:", specialize(nz_cusp_free(2, 2), "lambda_eq_1"))
print("  node m=1 d=2:", specialize(nz_node_free(1, 2), "lambda_eq_1"))

print("\nTable 1 (node m=1), canonical form:")
print(table_text(1, computed=True))
