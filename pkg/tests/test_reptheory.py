"""Isotypical decomposition and highest-weight space extraction."""

import pytest

from wsdalg.scalars import GaussRational, ZERO
from wsdalg import forms
from wsdalg.forms import hodge_star, monomial, poincare_pair
from wsdalg import operators as ops
from wsdalg.reptheory import (
    HW_DIMS,
    HW_HALF_DIMS,
    SpaceEscape,
    SpanSolver,
    highest_weight_space,
    isotypical_table,
    multidegree_classes,
    restrict_operator,
)

EXPECTED_ROWS = [
    (1, 0, 0, 0),
    (0, 3, 0, 0),
    (3, 6, 3, 0),
    (10, 9, 8, 1),
    (6, 18, 9, 3),
    (6, 18, 9, 3),
    (10, 9, 8, 1),
    (3, 6, 3, 0),
    (0, 3, 0, 0),
    (1, 0, 0, 0),
]


def test_multidegree_classes_partition():
    classes = multidegree_classes()
    assert sum(len(v) for v in classes.values()) == 512
    assert len(classes) == 64
    assert len(classes[(1, 1, 1)]) == 27


def test_isotypical_table():
    table = isotypical_table()
    assert table.rows() == EXPECTED_ROWS
    assert table.dimension_check()
    assert [table.column_total(k) for k in range(4)] == list(HW_DIMS)


def test_table_serialization():
    table = isotypical_table()
    csv = table.as_csv()
    assert csv.splitlines()[0] == "degree,rho0,rho1,rho2,rho3"
    assert csv.splitlines()[3] == "2,3,6,3,0"
    rows = table.as_json_rows()
    assert rows[3] == {"degree": 3, "rho0": 10, "rho1": 9, "rho2": 8, "rho3": 1}


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_highest_weight_spaces(k):
    hw = highest_weight_space(k)
    total, even, odd = hw.dims()
    assert total == HW_DIMS[k]
    assert even == odd == HW_HALF_DIMS[k]
    e, _, h = ops.sl2_triple()
    for v in hw.vectors():
        assert e.apply(v).is_zero()
        assert h.apply(v) == v.scale(2 * k)


def test_hw1_contains_degree_one_vector():
    hw = highest_weight_space(1)
    w10 = forms.w_form(1, 0)
    solver = SpanSolver(hw.vectors())
    assert solver.coordinates(w10) is not None


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_hodge_star_exchanges_halves(k):
    hw = highest_weight_space(k)
    even_solver = SpanSolver(hw.even)
    odd_solver = SpanSolver(hw.odd)
    for v in hw.even:
        assert odd_solver.coordinates(hodge_star(v)) is not None
    for v in hw.odd:
        assert even_solver.coordinates(hodge_star(v)) is not None


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_pairing_nondegenerate_on_hw(k):
    from wsdalg.linalg import rank_dense

    vecs = highest_weight_space(k).vectors()
    mat = [[poincare_pair(a, b) for b in vecs] for a in vecs]
    assert rank_dense(mat, len(vecs)) == len(vecs)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_hw_invariant_under_generators(k):
    hw = highest_weight_space(k)
    vecs = hw.vectors()
    solver = SpanSolver(vecs)
    for name, g in ops.standard_generators().items():
        restrict_operator(g, vecs, solver)  # raises SpaceEscape on failure


def test_restrict_identity():
    hw = highest_weight_space(3)
    mat = restrict_operator(ops.identity(), hw.vectors())
    n = len(hw.vectors())
    for r in range(n):
        for c in range(n):
            assert mat[r][c] == (GaussRational(1) if r == c else ZERO)


def test_restrict_escape_detection():
    hw = highest_weight_space(3)
    with pytest.raises(SpaceEscape):
        restrict_operator(ops.build_E(1, 0), hw.vectors())


def test_restrict_V_zero_on_smallest_space():
    hw = highest_weight_space(3)
    for j in range(3):
        mat = restrict_operator(ops.build_V(j), hw.vectors())
        assert all(v == ZERO for row in mat for v in row)
        mat = restrict_operator(ops.build_A(j), hw.vectors())
        assert all(v == ZERO for row in mat for v in row)


def test_total_dimension_bookkeeping():
    table = isotypical_table()
    total = sum(
        table.multiplicity.get((d, k), 0) * (2 * k + 1)
        for d in range(10)
        for k in range(4)
    )
    assert total == 512
