#!/usr/bin/env python3
"""The canonical operators and their relations.

Builds the creation/annihilation pairs, the structure operators, the
rotation derivations, and the toral family, then demonstrates the exact
identities the test suite checks exhaustively.
"""

from wsdalg import forms
from wsdalg.forms import format_form
from wsdalg.scalars import I
from wsdalg import operators as ops

print("== creation/annihilation relations ==")
rep = ops.clifford_relations_report()
print(f"  {rep['checks']} identities checked, pass = {rep['pass']}")
print(f"  plain adjoint exchanges E and I: {rep['adjoint_exchange']['plain']}")

print("\n== structure operators ==")
print("  L0(1) =", format_form(ops.build_L(0).apply(forms.one())))
print("  V0(1) =", format_form(ops.build_V(0).apply(forms.one())))
lam0 = ops.build_Lambda(0)
print("  Lambda0(omega_D) =", format_form(lam0.apply(forms.omegaD())))
a0 = ops.build_A(0)
print("  A0(Vol(W_0)) =", format_form(a0.apply(forms.block_volume(0))))

print("\n== rotation invariance ==")
gens = ops.standard_generators()
ok = all(
    g.compose(ops.build_J(k)) == ops.build_J(k).compose(g)
    for g in gens.values()
    for k in (1, 2, 3)
)
print("  [g, J_k] = 0 for all twelve generators:", ok)

print("\n== block permutations ==")
swap01 = (1, 0, 2)
print("  sigma(V0) == V1:", ops.s3_conjugate(swap01, ops.build_V(0)) == ops.build_V(1))
print("  sigma(L0) == -L1:", ops.s3_conjugate(swap01, ops.build_L(0)) == ops.build_L(1).scale(-1))

print("\n== pairing preservation ==")
ok = all(
    ops.super_adjoint(g) == ops.hodge_conjugate(g).scale(-1) for g in gens.values()
)
print("  g* = -(star g star) for all twelve generators:", ok)

print("\n== toral operators ==")
K00 = ops.build_K(0, 0)
print("  K00(1) =", format_form(K00.apply(forms.one())))
H0, K01 = ops.build_H(0), ops.build_K(0, 1)
print("  [H0, K01] == -3 K01:", ops.superbracket(H0, K01) == K01.scale(-3))

print("\n== weight decomposition of iL0 ==")
buckets = ops.kw_decompose(ops.build_L(0).scale(I))
for w, comp in sorted(buckets.items(), key=lambda kv: repr(kv[0])):
    label = "(" + ",".join(str(z.im) + "i" if z.im else "0" for z in w) + ")"
    print(f"  weight {label}: {comp.nnz()} entries")

print("\n== Chevalley-Serre presentation of the even algebra ==")
serre = ops.serre_check()
print(f"  {serre['checks']} relations, pass = {serre['pass']}")
