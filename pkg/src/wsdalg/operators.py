"""Canonical operators on the 512-dimensional exterior algebra.

This module builds every operator the package reasons about, as concrete
sparse matrices over Q(i) in the monomial basis:

* wedge and contraction generators E_ij, I_ij;
* the structure operators L_j (wedge with the three distinguished
  two-forms), the block-volume wedges V_j, and the rotation derivations J_k;
* metric adjoints (plain and super), giving Lambda_j = L_j* and
  A_j = super-adjoint of V_j;
* the graded commutator, the Hodge conjugation phi -> * phi *, the natural
  permutation action on the block index, the toral operators H_j and K_lm,
  the weight-pattern decomposition of an operator, and the super adjoint
  of the graded Hilbert pairing (dagger).

Operators are stored column-sparse: cols[input_mask] = {output_mask: coeff}.
The wedge/contraction generators touch O(1) outputs per input and
composition walks columns, so this is the natural orientation.
"""

from __future__ import annotations

from .scalars import GaussRational, I, ONE, ZERO, gauss
from . import forms
from .forms import (
    DIM,
    FULL_MASK,
    NPOS,
    Form,
    monomial,
    multidegree_of_mask,
    pos,
)

__all__ = [
    "Operator",
    "wedge_operator",
    "creation",
    "annihilation",
    "build_E",
    "build_I",
    "build_L",
    "build_V",
    "build_J",
    "identity",
    "zero_operator",
    "star_operator",
    "plain_adjoint",
    "super_adjoint",
    "dagger",
    "hodge_conjugate",
    "superbracket",
    "perm_operator",
    "s3_conjugate",
    "PERMUTATIONS",
    "perm_sign",
    "build_Lambda",
    "build_A",
    "build_H",
    "build_K",
    "standard_generators",
    "GENERATOR_NAMES",
    "sl2_triple",
    "serre_generators",
    "serre_check",
    "clifford_relations_report",
    "kw_pattern",
    "kw_form_weight",
    "kw_decompose",
    "supertrace",
    "dump_operator",
]


class Operator:
    """Sparse linear map of the 512-dimensional algebra over Q(i).

    cols maps an input basis mask to the sparse column {output mask: coeff}.
    parity is 0 (even), 1 (odd) or None (mixed), read off the entries.
    """

    __slots__ = ("cols",)

    def __init__(self, cols: dict[int, dict[int, GaussRational]] | None = None):
        clean: dict[int, dict[int, GaussRational]] = {}
        for c, col in (cols or {}).items():
            nz = {r: v for r, v in col.items() if v}
            if nz:
                clean[c] = nz
        self.cols = clean

    # -- linear structure ---------------------------------------------------

    def __add__(self, other: "Operator") -> "Operator":
        out = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            dst = out.setdefault(c, {})
            for r, v in col.items():
                s = dst.get(r, ZERO) + v
                if s:
                    dst[r] = s
                else:
                    dst.pop(r, None)
            if not dst:
                del out[c]
        return Operator(out)

    def __sub__(self, other: "Operator") -> "Operator":
        return self + other.scale(-1)

    def __neg__(self) -> "Operator":
        return self.scale(-1)

    def scale(self, s) -> "Operator":
        s = gauss(s)
        if not s:
            return Operator()
        return Operator({c: {r: s * v for r, v in col.items()} for c, col in self.cols.items()})

    def __mul__(self, other):
        if isinstance(other, Operator):
            return self.compose(other)
        return self.scale(other)

    __rmul__ = scale

    def compose(self, other: "Operator") -> "Operator":
        """self after other (matrix product self @ other)."""
        out: dict[int, dict[int, GaussRational]] = {}
        for c, col in other.cols.items():
            dst: dict[int, GaussRational] = {}
            for mid, v1 in col.items():
                col2 = self.cols.get(mid)
                if not col2:
                    continue
                for r, v2 in col2.items():
                    s = dst.get(r, ZERO) + v2 * v1
                    if s:
                        dst[r] = s
                    else:
                        dst.pop(r, None)
            if dst:
                out[c] = dst
        return Operator(out)

    def apply(self, f: Form) -> Form:
        out: dict[int, GaussRational] = {}
        for m, c in f.coeffs.items():
            col = self.cols.get(m)
            if not col:
                continue
            for r, v in col.items():
                s = out.get(r, ZERO) + v * c
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return Form(out)

    def __call__(self, f: Form) -> Form:
        return self.apply(f)

    # -- structure queries ----------------------------------------------------

    def entry(self, row: int, col: int) -> GaussRational:
        return self.cols.get(col, {}).get(row, ZERO)

    def is_zero(self) -> bool:
        return not self.cols

    def __bool__(self) -> bool:
        return bool(self.cols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Operator) and self.cols == other.cols

    def __hash__(self):
        raise TypeError("Operator is unhashable")

    def parity(self) -> int | None:
        """0 for even, 1 for odd, None for mixed or zero-without-meaning."""
        par: int | None = None
        for c, col in self.cols.items():
            dc = c.bit_count()
            for r in col:
                p = (r.bit_count() - dc) & 1
                if par is None:
                    par = p
                elif par != p:
                    return None
        return par

    def multidegree_shift(self) -> tuple[int, int, int] | None:
        """Common (da, db, dc) of all entries, or None if mixed."""
        shift: tuple[int, int, int] | None = None
        for c, col in self.cols.items():
            mc = multidegree_of_mask(c)
            for r in col:
                mr = multidegree_of_mask(r)
                d = (mr[0] - mc[0], mr[1] - mc[1], mr[2] - mc[2])
                if shift is None:
                    shift = d
                elif shift != d:
                    return None
        return shift

    def nnz(self) -> int:
        return sum(len(col) for col in self.cols.values())

    def __repr__(self):
        return f"<Operator nnz={self.nnz()} parity={self.parity()}>"


def zero_operator() -> Operator:
    return Operator()


def identity() -> Operator:
    return Operator({m: {m: ONE} for m in range(DIM)})


def creation(p: int) -> Operator:
    """Wedge with the basis one-form at position p."""
    bit = 1 << p
    cols = {}
    for m in range(DIM):
        if m & bit:
            continue
        sgn = -1 if (m & (bit - 1)).bit_count() & 1 else 1
        cols[m] = {m | bit: ONE if sgn > 0 else -ONE}
    return Operator(cols)


def annihilation(p: int) -> Operator:
    """Contraction with the vector dual to position p."""
    bit = 1 << p
    cols = {}
    for m in range(DIM):
        if not m & bit:
            continue
        sgn = -1 if (m & (bit - 1)).bit_count() & 1 else 1
        cols[m] = {m ^ bit: ONE if sgn > 0 else -ONE}
    return Operator(cols)


def build_E(i: int, j: int) -> Operator:
    return creation(pos(i, j))


def build_I(i: int, j: int) -> Operator:
    return annihilation(pos(i, j))


def wedge_operator(f: Form) -> Operator:
    """Left wedge with a fixed form."""
    cols = {}
    for m in range(DIM):
        img = forms.wedge(f, monomial(m))
        if img.coeffs:
            cols[m] = dict(img.coeffs)
    return Operator(cols)


def build_L(j: int) -> Operator:
    """L_0 = omegaD ^ ., L_1 = -omega2 ^ ., L_2 = omega1 ^ . """
    if j == 0:
        return wedge_operator(forms.omegaD())
    if j == 1:
        return wedge_operator(forms.omega2()).scale(-1)
    if j == 2:
        return wedge_operator(forms.omega1())
    raise ValueError(f"L index out of range: {j}")


def build_V(j: int) -> Operator:
    """Wedge with the block volume Vol(W_j) = v_1j ^ v_2j ^ v_3j."""
    if j not in (0, 1, 2):
        raise ValueError(f"V index out of range: {j}")
    return wedge_operator(forms.block_volume(j))


_J_ACTION = {
    # k -> {source i: (target i, sign)}
    1: {2: (3, 1), 3: (2, -1)},
    2: {3: (1, 1), 1: (3, -1)},
    3: {1: (2, 1), 2: (1, -1)},
}


def build_J(k: int) -> Operator:
    """Rotation generators, extended to the whole algebra as even
    derivations: J(v ^ w) = J(v) ^ w + v ^ J(w)."""
    if k not in (1, 2, 3):
        raise ValueError(f"J index out of range: {k}")
    act = _J_ACTION[k]
    cols: dict[int, dict[int, GaussRational]] = {}
    for m in range(1, DIM):
        col: dict[int, GaussRational] = {}
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            p = low.bit_length() - 1
            i, j = p % 3 + 1, p // 3
            hit = act.get(i)
            if hit is None:
                continue
            i2, sgn = hit
            p2 = pos(i2, j)
            bit2 = 1 << p2
            others = m ^ low
            if others & bit2:
                continue
            # replace the factor in place, then count the factors the moved
            # one-form jumps over to reach ascending order
            lo, hi = (p, p2) if p < p2 else (p2, p)
            between = others & ((1 << hi) - 1) & ~((1 << (lo + 1)) - 1)
            s = sgn if between.bit_count() % 2 == 0 else -sgn
            r = others | bit2
            cur = col.get(r, ZERO) + (ONE if s > 0 else -ONE)
            if cur:
                col[r] = cur
            else:
                col.pop(r, None)
        if col:
            cols[m] = col
    return Operator(cols)


_STAR: Operator | None = None


def star_operator() -> Operator:
    global _STAR
    if _STAR is None:
        _STAR = Operator(
            {
                m: {FULL_MASK ^ m: ONE if forms.star_sign(m) > 0 else -ONE}
                for m in range(DIM)
            }
        )
    return _STAR


# -- adjoints -------------------------------------------------------------------


def plain_adjoint(phi: Operator) -> Operator:
    """Conjugate transpose in the orthonormal monomial basis."""
    out: dict[int, dict[int, GaussRational]] = {}
    for c, col in phi.cols.items():
        for r, v in col.items():
            out.setdefault(r, {})[c] = v.conjugate()
    return Operator(out)


def super_adjoint(phi: Operator) -> Operator:
    """Adjoint twisted by the parity of the first argument:

        (phi(a), b) = (-1)^{|phi| deg(a)} (a, phi_star(b)).

    Entrywise: phi_star[r, c] = (-1)^{|phi| deg(r)} conj(phi[c, r]).
    Requires definite parity; an involution on even operators and a
    square root of -Id on odd ones.
    """
    par = phi.parity()
    if par is None:
        raise ValueError("super_adjoint needs an operator of definite parity")
    out: dict[int, dict[int, GaussRational]] = {}
    for c, col in phi.cols.items():
        sgn = -1 if (par and c.bit_count() & 1) else 1
        for r, v in col.items():
            w = v.conjugate()
            out.setdefault(r, {})[c] = w if sgn > 0 else -w
    return Operator(out)


def dagger(phi: Operator) -> Operator:
    """Super adjoint for the graded Hilbert pairing <x,y> (equal to (x,y)
    on even pairs, i(x,y) on odd pairs, 0 across parity).

    Reduces to the plain adjoint on even operators and to -i times the
    plain adjoint on odd ones.
    """
    par = phi.parity()
    if par is None:
        raise ValueError("dagger needs an operator of definite parity")
    adj = plain_adjoint(phi)
    return adj if par == 0 else adj.scale(-I)


def hodge_conjugate(phi: Operator) -> Operator:
    """star . phi . star"""
    s = star_operator()
    return s.compose(phi).compose(s)


def superbracket(phi: Operator, psi: Operator) -> Operator:
    """Graded commutator phi psi - (-1)^{|phi||psi|} psi phi."""
    p1, p2 = phi.parity(), psi.parity()
    if p1 is None or p2 is None:
        raise ValueError("superbracket needs operators of definite parity")
    ab = phi.compose(psi)
    ba = psi.compose(phi)
    return ab + ba if (p1 and p2) else ab - ba


# -- permutation action on the block index -----------------------------------

PERMUTATIONS: tuple[tuple[int, int, int], ...] = (
    (0, 1, 2),
    (1, 0, 2),
    (2, 1, 0),
    (0, 2, 1),
    (1, 2, 0),
    (2, 0, 1),
)


def perm_sign(sigma: tuple[int, int, int]) -> int:
    inv = sum(
        1
        for x in range(3)
        for y in range(x + 1, 3)
        if sigma[x] > sigma[y]
    )
    return -1 if inv & 1 else 1


def perm_operator(sigma: tuple[int, int, int]) -> Operator:
    """v_ij -> v_{i, sigma(j)} extended multiplicatively (a signed
    permutation of the basis monomials)."""
    cols = {}
    for m in range(DIM):
        positions = [p for p in range(NPOS) if m >> p & 1]
        mapped = [3 * sigma[p // 3] + p % 3 for p in positions]
        target = 0
        for p in mapped:
            target |= 1 << p
        inv = sum(
            1
            for x in range(len(mapped))
            for y in range(x + 1, len(mapped))
            if mapped[x] > mapped[y]
        )
        cols[m] = {target: ONE if inv % 2 == 0 else -ONE}
    return Operator(cols)


def s3_conjugate(sigma: tuple[int, int, int], phi: Operator) -> Operator:
    p = perm_operator(sigma)
    inv = tuple(sigma.index(j) for j in range(3))
    return p.compose(phi).compose(perm_operator(inv))  # type: ignore[arg-type]


# -- derived canonical operators ----------------------------------------------


def build_Lambda(j: int) -> Operator:
    """Lambda_j, the (super = plain, since L_j is even) adjoint of L_j."""
    return super_adjoint(build_L(j))


def build_A(j: int) -> Operator:
    """A_j, the super adjoint of the odd wedge operator V_j."""
    return super_adjoint(build_V(j))


def build_H(j: int) -> Operator:
    """H_j = [i Lambda_j, i L_j]."""
    return superbracket(build_Lambda(j).scale(I), build_L(j).scale(I))


def build_K(l: int, m: int) -> Operator:
    """K_lm = [i V_l, A_m]."""
    return superbracket(build_V(l).scale(I), build_A(m))


GENERATOR_NAMES = (
    "iL0", "iL1", "iL2",
    "iLambda0", "iLambda1", "iLambda2",
    "iV0", "iV1", "iV2",
    "A0", "A1", "A2",
)


def standard_generators() -> dict[str, Operator]:
    """The twelve generators in their fixed seeding order."""
    gens: dict[str, Operator] = {}
    for j in range(3):
        gens[f"iL{j}"] = build_L(j).scale(I)
    for j in range(3):
        gens[f"iLambda{j}"] = build_Lambda(j).scale(I)
    for j in range(3):
        gens[f"iV{j}"] = build_V(j).scale(I)
    for j in range(3):
        gens[f"A{j}"] = build_A(j)
    return gens


# -- weight operators ------------------------------------------------------------


def sl2_triple() -> tuple[Operator, Operator, Operator]:
    """Raising/lowering/Cartan triple of the rotation action:
    e = iJ1 - J2, f = iJ1 + J2, h = 2iJ3."""
    j1, j2, j3 = build_J(1), build_J(2), build_J(3)
    e = j1.scale(I) - j2
    f = j1.scale(I) + j2
    h = j3.scale(GaussRational(0, 2))
    return e, f, h


def serre_generators() -> dict[str, Operator]:
    """Chevalley generators of the even algebra, one triple per node of the
    A3 diagram:

        e1 = [L0, Lambda1]   f1 = [L1, Lambda0]   h1 = [e1, f1]
        e2 = [L1, Lambda2]   f2 = [L2, Lambda1]   h2 = [e2, f2]
        e3 = L2              f3 = Lambda2         h3 = [e3, f3]
    """
    L = [build_L(j) for j in range(3)]
    Lam = [build_Lambda(j) for j in range(3)]
    g = {
        "e1": superbracket(L[0], Lam[1]),
        "f1": superbracket(L[1], Lam[0]),
        "e2": superbracket(L[1], Lam[2]),
        "f2": superbracket(L[2], Lam[1]),
        "e3": L[2],
        "f3": Lam[2],
    }
    for k in (1, 2, 3):
        g[f"h{k}"] = superbracket(g[f"e{k}"], g[f"f{k}"])
    return g


_CARTAN_A3 = ((2, -1, 0), (-1, 2, -1), (0, -1, 2))


def serre_check() -> dict:
    """Verify the A3 Chevalley-Serre presentation of the even algebra and
    the sl2 relations of the rotation triple.  Returns a report dict with
    a 'failures' list naming each violated identity."""
    g = serre_generators()
    failures: list[str] = []
    checks = 0

    def expect_zero(op: Operator, name: str):
        nonlocal checks
        checks += 1
        if op:
            failures.append(name)

    for k in (1, 2, 3):
        for l in (1, 2, 3):
            expect_zero(superbracket(g[f"h{k}"], g[f"h{l}"]), f"[h{k},h{l}] != 0")
            expected = g[f"h{k}"] if k == l else zero_operator()
            expect_zero(
                superbracket(g[f"e{k}"], g[f"f{l}"]) - expected,
                f"[e{k},f{l}] != {'h%d' % k if k == l else '0'}",
            )
            a = _CARTAN_A3[k - 1][l - 1]
            expect_zero(
                superbracket(g[f"h{k}"], g[f"e{l}"]) - g[f"e{l}"].scale(a),
                f"[h{k},e{l}] != {a}*e{l}",
            )
            expect_zero(
                superbracket(g[f"h{k}"], g[f"f{l}"]) - g[f"f{l}"].scale(-a),
                f"[h{k},f{l}] != {-a}*f{l}",
            )
            if k != l:
                n = 1 - a
                for sym in ("e", "f"):
                    ad = g[f"{sym}{l}"]
                    for _ in range(n):
                        ad = superbracket(g[f"{sym}{k}"], ad)
                    expect_zero(ad, f"ad({sym}{k})^{n}({sym}{l}) != 0")

    e, f, h = sl2_triple()
    expect_zero(superbracket(h, e) - e.scale(2), "[h,e] != 2e (rotation triple)")
    expect_zero(superbracket(h, f) - f.scale(-2), "[h,f] != -2f (rotation triple)")
    expect_zero(superbracket(e, f) - h, "[e,f] != h (rotation triple)")
    w10 = forms.w_form(1, 0)
    checks += 1
    if h.apply(w10) - w10.scale(2):
        failures.append("h(w10) != 2*w10")

    return {"checks": checks, "failures": failures, "pass": not failures}


def clifford_relations_report() -> dict:
    """Exhaustive check of the creation/annihilation relations.

    Families:
      * E_ij E_kl + E_kl E_ij = 0 for all 81 pairs, and likewise for I;
      * E_ij I_ij + I_ij E_ij = Id for all 9 indices;
      * E_ij I_kl + I_kl E_ij = 0 for the 72 mixed pairs;
      * plain adjoint exchanges E and I.

    The report also records which adjoint (plain or super) satisfies the
    exchange, since the two differ by entrywise signs on odd rows.
    """
    E = {(i, j): build_E(i, j) for i in (1, 2, 3) for j in (0, 1, 2)}
    Iops = {(i, j): build_I(i, j) for i in (1, 2, 3) for j in (0, 1, 2)}
    idx = sorted(E)
    ident = identity()
    failures: list[str] = []
    checks = 0

    def anti(a: Operator, b: Operator) -> bool:
        return not (a.compose(b) + b.compose(a))

    for x in idx:
        for y in idx:
            checks += 2
            if not anti(E[x], E[y]):
                failures.append(f"E{x}E{y} + E{y}E{x} != 0")
            if not anti(Iops[x], Iops[y]):
                failures.append(f"I{x}I{y} + I{y}I{x} != 0")
            checks += 1
            if x == y:
                if E[x].compose(Iops[x]) + Iops[x].compose(E[x]) != ident:
                    failures.append(f"E{x}I{x} + I{x}E{x} != Id")
            else:
                if not anti(E[x], Iops[y]):
                    failures.append(f"E{x}I{y} + I{y}E{x} != 0")

    plain_ok = all(plain_adjoint(E[x]) == Iops[x] for x in idx)
    super_ok = all(super_adjoint(E[x]) == Iops[x] for x in idx)
    checks += 1
    if not plain_ok:
        failures.append("plain adjoint does not exchange E and I")
    return {
        "checks": checks,
        "failures": failures,
        "pass": not failures,
        "adjoint_exchange": {"plain": plain_ok, "super": super_ok},
    }


# -- weight patterns ----------------------------------------------------------


def kw_pattern(md: tuple[int, int, int]) -> tuple[int, int, int]:
    """Block occupancy pattern (d_{a,0} - d_{a,3}, ...) of a multidegree:
    +1 on an empty block, -1 on a full one, 0 in between."""
    return tuple((1 if x == 0 else 0) - (1 if x == 3 else 0) for x in md)  # type: ignore[return-value]


def kw_form_weight(mask: int) -> tuple[GaussRational, GaussRational, GaussRational]:
    """Simultaneous K_mm eigenvalue triple of a basis monomial:
    i * (-1)^degree * pattern, valued in {0, +i, -i}."""
    sgn = -1 if mask.bit_count() & 1 else 1
    pat = kw_pattern(multidegree_of_mask(mask))
    return tuple(GaussRational(0, sgn * t) for t in pat)  # type: ignore[return-value]


def kw_decompose(phi: Operator) -> dict[tuple[GaussRational, ...], Operator]:
    """Split an operator by the occupancy-pattern weight of its entries.

    The bucket of an entry col -> row is i*(pattern(row) - pattern(col)),
    using the multidegree patterns alone.  The buckets sum to the operator.
    On forms of even degree a bucket of weight z is an ad(K_mm) eigenvector
    of eigenvalue z_m, and of eigenvalue -z_m on odd degree; each explicit
    basis the package restricts to has a single degree parity, so on those
    spaces the buckets are genuine simultaneous eigencomponents.
    """
    buckets: dict[tuple[GaussRational, ...], dict[int, dict[int, GaussRational]]] = {}
    for c, col in phi.cols.items():
        pc = kw_pattern(multidegree_of_mask(c))
        for r, v in col.items():
            pr = kw_pattern(multidegree_of_mask(r))
            key = tuple(GaussRational(0, pr[t] - pc[t]) for t in range(3))
            buckets.setdefault(key, {}).setdefault(c, {})[r] = v
    return {k: Operator(colmap) for k, colmap in buckets.items()}


def supertrace(phi: Operator) -> GaussRational:
    """Trace on even-degree monomials minus trace on odd-degree ones."""
    acc = ZERO
    for c, col in phi.cols.items():
        v = col.get(c)
        if v:
            acc = acc + (v if c.bit_count() % 2 == 0 else -v)
    return acc


def dump_operator(phi: Operator) -> list[tuple[int, int, str]]:
    """Sorted (row_mask, col_mask, scalar) triples, for golden tests."""
    out = []
    for c, col in phi.cols.items():
        for r, v in col.items():
            out.append((r, c, str(v)))
    out.sort()
    return out
