"""Decomposition of the algebra under the rotation sl2 triple.

The raising/lowering/Cartan operators e, f, h of the rotation action
preserve both the form degree and the block multidegree, so every kernel
and eigenspace computation splits into the 64 multidegree classes (of
dimension at most 27) and stays exact over Q(i).

A highest-weight vector of type k is killed by e and has h-eigenvalue 2k;
HW_k collects them across all degrees, split into even and odd form degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .scalars import GaussRational, ZERO
from .forms import Form, multidegree_of_mask
from .linalg import CoordinateSolver, kernel_basis
from .operators import Operator, sl2_triple

__all__ = [
    "multidegree_classes",
    "IsotypicalTable",
    "isotypical_table",
    "HWSpace",
    "highest_weight_space",
    "SpanSolver",
    "SpaceEscape",
    "restrict_operator",
    "HW_DIMS",
    "HW_HALF_DIMS",
]

# column totals of the multiplicity table and their parity splits
HW_DIMS = (40, 72, 40, 8)
HW_HALF_DIMS = (20, 36, 20, 4)

_BINOM9 = (1, 9, 36, 84, 126, 126, 84, 36, 9, 1)


@lru_cache(maxsize=1)
def multidegree_classes() -> dict[tuple[int, int, int], list[int]]:
    """Masks grouped by (a, b, c), each list in increasing mask order."""
    classes: dict[tuple[int, int, int], list[int]] = {}
    for m in range(512):
        classes.setdefault(multidegree_of_mask(m), []).append(m)
    return classes


def _class_matrix(op: Operator, masks: list[int]) -> list[list[GaussRational]]:
    """Matrix of an operator on a multidegree class it preserves."""
    index = {m: i for i, m in enumerate(masks)}
    cols = []
    for m in masks:
        col = [ZERO] * len(masks)
        for r, v in op.cols.get(m, {}).items():
            if r not in index:
                raise ValueError("operator leaves the multidegree class")
            col[index[r]] = v
        cols.append(col)
    # transpose to rows
    return [[cols[c][r] for c in range(len(masks))] for r in range(len(masks))]


@lru_cache(maxsize=8)
def _hw_class_vectors(k: int) -> list[tuple[tuple[int, int, int], list[Form]]]:
    """Per multidegree class, a deterministic basis of ker(e) with
    h-eigenvalue 2k."""
    e, _, h = sl2_triple()
    classes = multidegree_classes()
    out = []
    for md in sorted(classes):
        masks = classes[md]
        em = _class_matrix(e, masks)
        hm = _class_matrix(h, masks)
        n = len(masks)
        stacked = em + [
            [hm[r][c] - (GaussRational(2 * k) if r == c else ZERO) for c in range(n)]
            for r in range(n)
        ]
        kern = kernel_basis(stacked, n)
        vecs = [
            Form({masks[i]: coord for i, coord in enumerate(vec) if coord})
            for vec in kern
        ]
        if vecs:
            out.append((md, vecs))
    return out


@dataclass
class IsotypicalTable:
    """multiplicity[(degree, k)] of the irreducible of highest weight 2k."""

    multiplicity: dict[tuple[int, int], int]
    max_type: int = 3

    def row(self, degree: int) -> tuple[int, ...]:
        return tuple(self.multiplicity.get((degree, k), 0) for k in range(self.max_type + 1))

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(d) for d in range(10)]

    def column_total(self, k: int) -> int:
        return sum(self.multiplicity.get((d, k), 0) for d in range(10))

    def dimension_check(self) -> bool:
        """sum_k mult(d,k) * (2k+1) must reproduce binomial(9, d)."""
        for d in range(10):
            if sum(m * (2 * k + 1) for k in range(self.max_type + 1)
                   for m in [self.multiplicity.get((d, k), 0)]) != _BINOM9[d]:
                return False
        return True

    def as_json_rows(self) -> list[dict]:
        return [
            {"degree": d, **{f"rho{k}": self.row(d)[k] for k in range(self.max_type + 1)}}
            for d in range(10)
        ]

    def as_csv(self) -> str:
        lines = ["degree," + ",".join(f"rho{k}" for k in range(self.max_type + 1))]
        for d in range(10):
            lines.append(f"{d}," + ",".join(str(x) for x in self.row(d)))
        return "\n".join(lines) + "\n"


def isotypical_table(max_type: int = 4) -> IsotypicalTable:
    """Multiplicities of each rotation type per form degree, computed as
    dim ker(e) on the h-eigenspace of eigenvalue 2k inside each degree."""
    mult: dict[tuple[int, int], int] = {}
    for k in range(max_type + 1):
        for md, vecs in _hw_class_vectors(k):
            d = sum(md)
            mult[(d, k)] = mult.get((d, k), 0) + len(vecs)
    # anything above type 3 must be absent; keep the table at 0..3
    for (d, k), m in mult.items():
        if k > 3 and m:
            raise AssertionError(f"unexpected type-{k} component in degree {d}")
    return IsotypicalTable({dk: m for dk, m in mult.items() if dk[1] <= 3})


@dataclass
class HWSpace:
    """Highest-weight vectors of one type, split by form-degree parity.

    The basis is echelon-canonical: classes ordered by (multidegree), each
    class basis from the deterministic kernel solver.
    """

    k: int
    even: list[Form] = field(default_factory=list)
    odd: list[Form] = field(default_factory=list)

    def vectors(self) -> list[Form]:
        return self.even + self.odd

    def dims(self) -> tuple[int, int, int]:
        return (len(self.even) + len(self.odd), len(self.even), len(self.odd))


def highest_weight_space(k: int) -> HWSpace:
    space = HWSpace(k)
    for md, vecs in _hw_class_vectors(k):
        (space.even if sum(md) % 2 == 0 else space.odd).extend(vecs)
    return space


class SpaceEscape(ValueError):
    """An operator mapped a basis vector outside the given span."""


class SpanSolver:
    """Coordinate solver for a family of multidegree-homogeneous forms.

    Vectors are grouped by multidegree; each image is decomposed per class,
    so solves stay tiny even for the 72-dimensional space.
    """

    def __init__(self, vectors: list[Form]):
        self.vectors = vectors
        self.by_md: dict[tuple[int, int, int], tuple[list[int], CoordinateSolver]] = {}
        for i, v in enumerate(vectors):
            md = _require_homogeneous(v, i)
            idxs, solver = self.by_md.setdefault(md, ([], CoordinateSolver()))
            idxs.append(i)
            if not solver.append(dict(v.coeffs)):
                raise ValueError(f"vector {i} is linearly dependent on earlier ones")

    def __len__(self):
        return len(self.vectors)

    def coordinates(self, f: Form) -> list[GaussRational] | None:
        out = [ZERO] * len(self.vectors)
        parts: dict[tuple[int, int, int], dict] = {}
        for m, c in f.coeffs.items():
            parts.setdefault(multidegree_of_mask(m), {})[m] = c
        for md, part in parts.items():
            hit = self.by_md.get(md)
            if hit is None:
                return None
            idxs, solver = hit
            coords = solver.coordinates(part)
            if coords is None:
                return None
            for local, c in enumerate(coords):
                if c:
                    out[idxs[local]] = c
        return out


def _require_homogeneous(v: Form, i: int) -> tuple[int, int, int]:
    mds = {multidegree_of_mask(m) for m in v.coeffs}
    if len(mds) != 1:
        raise ValueError(f"basis vector {i} is not multidegree homogeneous")
    return mds.pop()


def restrict_operator(
    phi: Operator,
    vectors: list[Form],
    solver: SpanSolver | None = None,
    labels: list[str] | None = None,
) -> list[list[GaussRational]]:
    """Matrix of phi on the span of ``vectors``: column c holds the
    coordinates of phi(vectors[c]).  Raises SpaceEscape when some image
    leaves the span, naming the offending vector."""
    solver = solver or SpanSolver(vectors)
    n = len(vectors)
    mat = [[ZERO] * n for _ in range(n)]
    for c, v in enumerate(vectors):
        img = phi.apply(v)
        coords = solver.coordinates(img)
        if coords is None:
            name = labels[c] if labels else f"vector {c}"
            raise SpaceEscape(f"image of {name} escapes the span")
        for r, val in enumerate(coords):
            if val:
                mat[r][c] = val
    return mat
