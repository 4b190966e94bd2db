"""Tabulated sparsity patterns of weight components on the labeled bases.

Each table lists, for one labeled half-basis, which cells of the restricted
matrices of the weight-homogeneous components of iL0, iL1, iL2 (and of the
K_lm that appear) are nonzero.  A mark like ``L0(0,-,-)`` at (row, col)
says: the component of iL0 with occupancy-pattern weight (0, -i, -i) has a
nonzero entry sending the column basis vector to the row basis vector.  A
trailing ``x`` flags cells whose nonzero value was confirmed by brute force
but whose scalar is irrelevant; here both kinds assert presence.  Cells
carrying no mark must vanish for every operator the table covers.

Scope note: only the operators actually appearing in a table are checked
against its blanks; the tables are partial by construction and say nothing
about operators (or basis vectors) they do not mention.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["TableEntry", "PatternTable", "ALL_TABLES", "op_name"]


@dataclass(frozen=True)
class TableEntry:
    op: tuple
    starred: bool


@dataclass(frozen=True)
class PatternTable:
    name: str
    space_k: int
    parity: str
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    entries: dict[tuple[str, str], TableEntry]


def _parse_spec(spec: str) -> TableEntry:
    starred = spec.endswith("x")
    if starred:
        spec = spec[:-1]
    if spec.startswith("K"):
        return TableEntry(("K", int(spec[1]), int(spec[2])), starred)
    j = int(spec[1])
    pat = tuple(0 if ch == "0" else -1 for ch in spec[3:-1].split(","))
    return TableEntry(("L", j, pat), starred)


def op_name(op: tuple) -> str:
    if op[0] == "K":
        return f"K{op[1]}{op[2]}"
    pat = ",".join("0" if t == 0 else "-" for t in op[2])
    return f"iL{op[1]}^({pat})"


def _table(name, k, parity, rows, cols, cells) -> PatternTable:
    entries = {}
    for r, c, spec in cells:
        if r not in rows or c not in cols:
            raise ValueError(f"{name}: bad cell ({r}, {c})")
        entries[(r, c)] = _parse_spec(spec)
    return PatternTable(name, k, parity, tuple(rows), tuple(cols), entries)


_HW0_LABELS = [
    "(0,0,0)", "(1,0,0)", "(0,1,0)", "(0,0,1)",
    "(2,0,0)", "(1,1,0)", "(1,0,1)", "(0,2,0)", "(0,1,1)", "(0,0,2)",
    "(3,0,0)", "(2,1,0)", "(2,0,1)", "(1,2,0)", "(1,1,1)", "(1,0,2)",
    "(0,3,0)", "(0,2,1)", "(0,1,2)", "(0,0,3)",
]

TABLE_HW0 = _table(
    "hw0", 0, "even", _HW0_LABELS, _HW0_LABELS,
    [
        ("(1,0,0)", "(0,0,0)", "L0(0,-,-)"),
        ("(0,1,0)", "(0,0,0)", "L1(-,0,-)"),
        ("(0,0,1)", "(0,0,0)", "L2(-,-,0)"),
        ("(2,0,0)", "(1,0,0)", "L0(0,0,0)"),
        ("(1,1,0)", "(1,0,0)", "L1(-,0,0)"),
        ("(1,1,0)", "(0,1,0)", "L0(0,-,0)"),
        ("(1,0,1)", "(1,0,0)", "L2(-,0,0)"),
        ("(1,0,1)", "(0,0,1)", "L0(0,0,-)"),
        ("(0,2,0)", "(0,1,0)", "L1(0,0,0)"),
        ("(0,1,1)", "(0,1,0)", "L2(0,-,0)"),
        ("(0,1,1)", "(0,0,1)", "L1(0,0,-)"),
        ("(0,0,2)", "(0,0,1)", "L2(0,0,0)"),
        ("(3,0,0)", "(2,0,0)", "L0(0,-,-)"),
        ("(2,1,0)", "(2,0,0)", "L1(-,0,-)"),
        ("(2,1,0)", "(1,1,0)", "L0(0,0,-)"),
        ("(2,0,1)", "(2,0,0)", "L2(-,-,0)"),
        ("(2,0,1)", "(1,0,1)", "L0(0,-,0)"),
        ("(1,2,0)", "(1,1,0)", "L1(0,0,-)"),
        ("(1,2,0)", "(0,2,0)", "L0(0,-,-)"),
        ("(1,1,1)", "(1,1,0)", "L2(0,0,0)"),
        ("(1,1,1)", "(1,0,1)", "L1(0,0,0)"),
        ("(1,1,1)", "(0,1,1)", "L0(0,0,0)"),
        ("(1,0,2)", "(1,0,1)", "L2(0,-,0)"),
        ("(1,0,2)", "(0,0,2)", "L0(0,-,-)"),
        ("(0,3,0)", "(0,2,0)", "L1(-,0,-)"),
        ("(0,3,0)", "(3,0,0)", "K01"),
        ("(0,2,1)", "(0,2,0)", "L2(-,-,0)"),
        ("(0,2,1)", "(0,1,1)", "L1(-,0,0)"),
        ("(0,1,2)", "(0,1,1)", "L2(-,0,0)"),
        ("(0,1,2)", "(0,0,2)", "L1(-,0,-)"),
        ("(0,0,3)", "(0,0,2)", "L2(-,-,0)"),
        ("(0,0,3)", "(3,0,0)", "K02"),
        ("(0,0,3)", "(0,3,0)", "K12"),
    ],
)

_HW2_LABELS = [
    "(0,0,0)01", "(1,0,0)01", "(0,1,0)01", "(0,0,1)01", "(2,0,0)01",
    "(1,1,0)01", "(0,2,0)01",
    "(0,0,0)02", "(1,0,0)02", "(0,1,0)02", "(0,0,1)02", "(2,0,0)02",
    "(0,0,2)02",
    "(0,0,0)12", "(1,0,0)12", "(0,1,0)12", "(0,0,1)12", "(0,2,0)12",
    "(0,1,1)12", "(0,0,2)12",
]

TABLE_HW2 = _table(
    "hw2", 2, "even", _HW2_LABELS, _HW2_LABELS,
    [
        ("(1,0,0)01", "(0,0,0)01", "L0(0,0,-)"),
        ("(0,1,0)01", "(0,0,0)01", "L1(0,0,-)"),
        ("(0,0,1)01", "(0,0,0)01", "L2(0,0,0)"),
        ("(2,0,0)01", "(1,0,0)01", "L0(0,-,0)"),
        ("(2,0,0)01", "(1,0,0)12", "L2(-,-,0)x"),
        ("(2,0,0)01", "(0,0,1)12", "L0(0,-,0)x"),
        ("(1,1,0)01", "(1,0,0)01", "L1(0,0,0)"),
        ("(1,1,0)01", "(0,1,0)01", "L0(0,0,0)"),
        ("(1,1,0)01", "(1,0,0)02", "L2(0,0,0)"),
        ("(1,1,0)01", "(0,0,1)02", "L0(0,0,0)"),
        ("(0,2,0)01", "(0,1,0)01", "L1(-,0,0)"),
        ("(0,2,0)01", "(0,1,0)02", "L2(-,-,0)x"),
        ("(0,2,0)01", "(0,0,1)02", "L1(-,0,0)x"),
        ("(1,0,0)02", "(0,0,0)02", "L0(0,-,0)"),
        ("(0,1,0)02", "(0,0,0)02", "L1(0,0,0)"),
        ("(0,0,1)02", "(0,0,0)02", "L2(0,-,0)"),
        ("(2,0,0)02", "(1,0,0)02", "L0(0,0,-)"),
        ("(2,0,0)02", "(1,0,0)12", "L1(-,0,-)x"),
        ("(2,0,0)02", "(0,1,0)12", "L0(0,0,-)x"),
        ("(0,0,2)02", "(0,1,0)01", "L2(-,0,0)x"),
        ("(0,0,2)02", "(0,0,1)01", "L1(-,0,-)x"),
        ("(0,0,2)02", "(0,0,1)02", "L2(-,0,0)"),
        ("(1,0,0)12", "(0,0,0)12", "L0(0,0,0)"),
        ("(0,1,0)12", "(0,0,0)12", "L1(-,0,0)"),
        ("(0,0,1)12", "(0,0,0)12", "L2(-,0,0)"),
        ("(0,2,0)12", "(1,0,0)02", "L1(0,0,-)x"),
        ("(0,2,0)12", "(0,1,0)02", "L0(0,-,-)x"),
        ("(0,2,0)12", "(0,1,0)12", "L1(0,0,-)"),
        ("(0,1,1)12", "(1,0,0)02", "L2(0,0,0)"),
        ("(0,1,1)12", "(0,0,1)02", "L0(0,0,0)"),
        ("(0,1,1)12", "(0,1,0)12", "L2(0,0,0)"),
        ("(0,1,1)12", "(0,0,1)12", "L1(0,0,0)"),
        ("(0,0,2)12", "(1,0,0)01", "L2(0,-,0)x"),
        ("(0,0,2)12", "(0,0,1)01", "L0(0,-,-)x"),
        ("(0,0,2)12", "(0,0,1)12", "L2(0,-,0)"),
    ],
)

_HW1_ROWS = [
    "(0,0,0)0", "(1,0,0)0", "(0,1,0)0", "(0,0,1)0", "(2,0,0)0", "(1,1,0)0",
    "(1,0,1)0", "(0,2,0)0", "(0,1,1)0", "(0,0,2)0", "(3,0,0)0", "(1,1,1)0",
    "(0,0,0)1", "(1,0,0)1", "(0,1,0)1", "(0,0,1)1", "(2,0,0)1", "(1,1,0)1",
    "(1,0,1)1", "(0,2,0)1", "(0,1,1)1", "(0,0,2)1", "(0,3,0)1", "(1,1,1)1",
    "(0,0,0)2", "(1,0,0)2", "(0,1,0)2", "(0,0,1)2", "(2,0,0)2", "(1,1,0)2",
    "(1,0,1)2", "(0,2,0)2", "(0,1,1)2", "(0,0,2)2", "(0,0,3)2", "(1,1,1)2",
]

TABLE_HW1_A = _table(
    "hw1-first", 1, "odd", _HW1_ROWS, _HW1_ROWS[:18],
    [
        ("(1,0,0)0", "(0,0,0)0", "L0(0,-,-)"),
        ("(0,1,0)0", "(0,0,0)0", "L1(0,0,-)"),
        ("(0,0,1)0", "(0,0,0)0", "L2(0,-,0)"),
        ("(2,0,0)0", "(1,0,0)0", "L0(0,0,0)"),
        ("(1,1,0)0", "(1,0,0)0", "L1(0,0,0)"),
        ("(1,1,0)0", "(0,1,0)0", "L0(0,-,0)"),
        ("(1,0,1)0", "(1,0,0)0", "L2(0,0,0)"),
        ("(1,0,1)0", "(0,0,1)0", "L0(0,0,-)"),
        ("(0,2,0)0", "(0,1,0)0", "L1(-,0,0)"),
        ("(0,2,0)0", "(2,0,0)1", "K01"),
        ("(0,1,1)0", "(0,1,0)0", "L2(-,-,0)"),
        ("(0,1,1)0", "(0,0,1)0", "L1(-,0,-)"),
        ("(0,0,2)0", "(0,0,1)0", "L2(-,0,0)"),
        ("(3,0,0)0", "(2,0,0)0", "L0(0,-,-)"),
        ("(3,0,0)0", "(2,0,0)1", "L1(-,0,-)x"),
        ("(3,0,0)0", "(1,1,0)1", "L0(0,-,-)x"),
        ("(1,1,1)0", "(1,1,0)0", "L2(-,0,0)"),
        ("(1,1,1)0", "(1,0,1)0", "L1(-,0,0)"),
        ("(1,1,1)0", "(0,1,1)0", "L0(0,0,0)"),
        ("(1,0,0)1", "(0,0,0)1", "L0(0,0,-)"),
        ("(0,1,0)1", "(0,0,0)1", "L1(-,0,-)"),
        ("(0,0,1)1", "(0,0,0)1", "L2(-,0,0)"),
        ("(2,0,0)1", "(0,2,0)0", "K10"),
        ("(2,0,0)1", "(1,0,0)1", "L0(0,-,0)"),
        ("(1,1,0)1", "(1,0,0)1", "L1(-,0,0)"),
        ("(1,1,0)1", "(0,1,0)1", "L0(0,0,0)"),
        ("(1,0,1)1", "(1,0,0)1", "L2(-,-,0)"),
        ("(1,0,1)1", "(0,0,1)1", "L0(0,-,-)"),
        ("(0,2,0)1", "(0,1,0)1", "L1(0,0,0)"),
        ("(0,1,1)1", "(0,1,0)1", "L2(0,0,0)"),
        ("(0,1,1)1", "(0,0,1)1", "L1(0,0,-)"),
        ("(0,0,2)1", "(0,0,1)1", "L2(0,-,0)"),
        ("(0,3,0)1", "(1,1,0)0", "L1(-,0,-)x"),
        ("(0,3,0)1", "(0,2,0)0", "L0(0,-,-)x"),
        ("(1,1,1)1", "(2,0,0)0", "L2(0,-,0)x"),
        ("(1,1,1)1", "(1,0,1)0", "L0(0,-,0)x"),
        ("(1,1,1)1", "(1,1,0)1", "L2(0,-,0)"),
        ("(2,0,0)2", "(0,0,2)0", "K20"),
        ("(0,0,3)2", "(1,0,1)0", "L2(-,-,0)x"),
        ("(0,0,3)2", "(0,0,2)0", "L0(0,-,-)x"),
        ("(1,1,1)2", "(2,0,0)0", "L1(0,0,-)x"),
        ("(1,1,1)2", "(1,1,0)0", "L0(0,0,-)x"),
        ("(1,1,1)2", "(1,1,0)1", "L1(0,0,-)x"),
    ],
)

TABLE_HW1_B = _table(
    "hw1-second", 1, "odd", _HW1_ROWS, _HW1_ROWS[18:],
    [
        ("(3,0,0)0", "(2,0,0)2", "L2(-,-,0)x"),
        ("(3,0,0)0", "(1,0,1)2", "L0(0,-,-)x"),
        ("(1,1,1)0", "(0,2,0)1", "L2(-,0,0)x"),
        ("(1,1,1)0", "(0,1,1)1", "L1(-,0,0)x"),
        ("(1,1,1)0", "(0,1,1)2", "L2(-,0,0)x"),
        ("(1,1,1)0", "(0,0,2)2", "L1(-,0,0)x"),
        ("(0,3,0)1", "(0,2,0)1", "L1(-,0,-)"),
        ("(0,3,0)1", "(0,2,0)2", "L2(-,-,0)x"),
        ("(0,3,0)1", "(0,1,1)2", "L1(-,0,-)x"),
        ("(1,1,1)1", "(1,0,1)1", "L1(0,0,0)"),
        ("(1,1,1)1", "(0,1,1)1", "L0(0,-,0)"),
        ("(1,1,1)1", "(1,0,1)2", "L2(0,-,0)x"),
        ("(1,1,1)1", "(0,0,2)2", "L0(0,-,0)x"),
        ("(1,0,0)2", "(0,0,0)2", "L0(0,-,0)"),
        ("(0,1,0)2", "(0,0,0)2", "L1(-,0,0)"),
        ("(0,0,1)2", "(0,0,0)2", "L2(-,-,0)"),
        ("(2,0,0)2", "(1,0,0)2", "L0(0,0,-)"),
        ("(1,1,0)2", "(1,0,0)2", "L1(-,0,-)"),
        ("(1,1,0)2", "(0,1,0)2", "L0(0,-,-)"),
        ("(1,0,1)2", "(1,0,0)2", "L2(-,0,0)"),
        ("(1,0,1)2", "(0,0,1)2", "L0(0,0,0)"),
        ("(0,2,0)2", "(0,0,2)1", "K21"),
        ("(0,2,0)2", "(0,1,0)2", "L1(0,0,-)"),
        ("(0,1,1)2", "(0,1,0)2", "L2(0,-,0)"),
        ("(0,1,1)2", "(0,0,1)2", "L1(0,0,0)"),
        ("(0,0,2)2", "(0,0,1)2", "L2(0,0,0)"),
        ("(0,0,3)2", "(0,1,1)1", "L2(-,-,0)x"),
        ("(0,0,3)2", "(0,0,2)1", "L1(-,0,-)x"),
        ("(0,0,3)2", "(0,0,2)2", "L2(-,-,0)"),
        ("(1,1,1)2", "(0,2,0)1", "L0(0,0,-)x"),
        ("(1,1,1)2", "(1,1,0)2", "L2(0,0,0)"),
        ("(1,1,1)2", "(1,0,1)2", "L1(0,0,-)"),
        ("(1,1,1)2", "(0,1,1)2", "L0(0,0,-)"),
    ],
)

ALL_TABLES = (TABLE_HW0, TABLE_HW2, TABLE_HW1_A, TABLE_HW1_B)
