#!/usr/bin/env python3
"""Tour of the 512-dimensional exterior algebra.

Walks through the coframe conventions, the wedge and contraction
operations, the Hodge star, and the two inner products, printing each
object in the package's textual syntax.
"""

from wsdalg import forms
from wsdalg.forms import (
    contract,
    format_form,
    hermitean_inner,
    hodge_star,
    monomial,
    multidegree,
    parse_form,
    poincare_pair,
    pos,
    wedge,
)

print("== coframe and masks ==")
print("nine one-forms v_ij, position pos(i,j) = 3j + (i-1):")
for j in range(3):
    print("  block W_%d:" % j, ", ".join(f"v{i}{j} -> bit {pos(i, j)}" for i in (1, 2, 3)))

print("\n== the distinguished two-forms ==")
for name, f in (("omega_1", forms.omega1()), ("omega_2", forms.omega2()),
                ("omega_D", forms.omegaD())):
    print(f"  {name} = {format_form(f)}   multidegree {multidegree(f)}")

print("\n== wedge ==")
a = parse_form("v10^v11")
b = parse_form("v20^v21")
print("  (v10^v11) ^ (v20^v21) =", format_form(wedge(a, b)))
w1 = forms.omega1()
cube = wedge(wedge(w1, w1), w1)
print("  omega_1^3 =", format_form(cube), " (a volume form of W_0 + W_1)")

print("\n== contraction is the adjoint of wedging a coframe factor ==")
f = parse_form("v10^v20")
print("  contract(v10, v10^v20) =", format_form(contract(pos(1, 0), f)))
print("  contract(v20, v10^v20) =", format_form(contract(pos(2, 0), f)))

print("\n== Hodge star ==")
print("  *1   =", format_form(hodge_star(forms.one())))
print("  *Vol =", format_form(hodge_star(forms.volume())))
v = parse_form("v10^v11")
print("  *(v10^v11) =", format_form(hodge_star(v)))
print("  ** = id on this form:", hodge_star(hodge_star(v)) == v)

print("\n== inner products ==")
w10 = forms.w_form(1, 0)
print("  w10 =", format_form(w10))
print("  (w10, w10) =", hermitean_inner(w10, w10))
print("  <1, Vol>   =", poincare_pair(forms.one(), forms.volume()))
print("  <v10, v10> =", poincare_pair(monomial(1), monomial(1)),
      " (degrees must sum to 9)")
alpha = parse_form("v10^v11")
print("  <a, *a> = (a, a) =", poincare_pair(alpha, hodge_star(alpha)))
