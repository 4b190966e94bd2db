#!/usr/bin/env python3
"""Decomposing the algebra under the rotation action.

The rotation derivations span an so(3); complexified, they give an sl2
whose raising/lowering/Cartan triple splits every degree of the exterior
algebra into irreducibles.  This script prints the multiplicity table and
the dimensions of the highest-weight spaces.
"""

from wsdalg.reptheory import highest_weight_space, isotypical_table

table = isotypical_table()

print("== multiplicities of the irreducible of highest weight 2k ==")
print("degree |  rho0  rho1  rho2  rho3   (x dim 1,3,5,7)")
for d in range(10):
    row = table.row(d)
    print(f"   {d}   | " + "".join(f"{m:6d}" for m in row))
print("totals | " + "".join(f"{table.column_total(k):6d}" for k in range(4)))
print("dimension bookkeeping against binomial(9, d):", table.dimension_check())

print("\n== highest-weight spaces ==")
for k in range(4):
    hw = highest_weight_space(k)
    total, even, odd = hw.dims()
    print(f"  HW_{k}: dim {total} = {even} (even degrees) + {odd} (odd degrees)")

print("\nthe twelve canonical operators preserve each HW_k, which is why")
print("the closure engine works on the 160-dimensional restriction")
print("(40 + 72 + 40 + 8) rather than on all 512 dimensions.")
