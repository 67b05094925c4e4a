"""Independent oracle implementations shared by the tests.

These deliberately avoid the production code paths: the action oracle
writes values into destination cells directly from the definition, the
orbit oracle is plain BFS instead of union-find, and the recovery oracle
tries all 24 relabelings.
"""

from __future__ import annotations

from itertools import permutations

from shidoku.board import Board, validate
from shidoku.perm import Perm, SymmetryElement


def oracle_apply(e: SymmetryElement, values: tuple[int, ...]) -> tuple[int, ...]:
    """Definition-level action: the value in cell i lands in cell pos(i),
    then every value v is renamed rel(v)."""
    out = [0] * 16
    for i in range(16):
        out[e.pos.image[i] - 1] = e.rel.image[values[i] - 1]
    return tuple(out)


def oracle_orbits(
    elements, boards: tuple[Board, ...]
) -> set[frozenset[Board]]:
    """Orbit partition by BFS over the given symmetry elements."""
    elements = tuple(elements)
    remaining = set(boards)
    blocks: set[frozenset[Board]] = set()
    while remaining:
        seed = remaining.pop()
        block = {seed}
        frontier = [seed]
        while frontier:
            new = []
            for b in frontier:
                for e in elements:
                    moved = Board(oracle_apply(e, b.values))
                    if moved not in block:
                        block.add(moved)
                        new.append(moved)
            frontier = new
        remaining -= block
        blocks.add(frozenset(block))
    return blocks


def oracle_recoveries(x: Perm, b: Board) -> list[Perm]:
    """All relabelings sigma with sigma(x(b)) = b, by trying every one."""
    found = []
    for image in permutations((1, 2, 3, 4)):
        sigma = Perm(image)
        e = SymmetryElement(x, sigma)
        if oracle_apply(e, b.values) == b.values:
            found.append(sigma)
    return found


def enumerate_by_row_products() -> list[Board]:
    """Exhaustive scan oracle for enumeration: every 16-tuple whose four
    rows are permutations of 1..4, filtered by the validator.

    Complete because any tuple outside this restricted space already
    violates a row constraint.
    """
    rows = list(permutations((1, 2, 3, 4)))
    found = []
    for r1 in rows:
        for r2 in rows:
            for r3 in rows:
                for r4 in rows:
                    values = r1 + r2 + r3 + r4
                    if validate(values):
                        found.append(Board(values))
    return found


# Pinned boards used across the tests (row strings joined row-major).
TYPE1_TEXT = "1234341221434321"
TYPE2_TEXT = "1234341223414123"
INVARIANT_UNDER_TRANSPOSE_TEXT = "1243342143122134"  # its transpose relabels back via (2 3)
TRANSPOSED_TEXT = "1342243142133124"  # the transpose of the board above
