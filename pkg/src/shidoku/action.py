"""The action of symmetry elements and groups on the board set.

A symmetry element (x, rel) sends board B to the board whose cell x(i)
holds rel(B[i]): cells move first, values are renamed second.  With the
right-factor-first composition convention this is a left action:
apply(a * b, board) == apply(a, apply(b, board)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .board import Board, enumerate_all, validate
from .group import SymmetryGroup, full_group
from .perm import Perm, SymmetryElement, gen_r, gen_r2, gen_s, gen_t
from .unionfind import UnionFind

NamedElement = tuple[str, SymmetryElement]


@lru_cache(maxsize=None)
def _action_table(e: SymmetryElement) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(source, rename) lookup tables: output slot j takes rename[values[source[j]]].

    source[j] is the 0-based cell whose value lands in 0-based slot j,
    i.e. the preimage of j+1 under the cell permutation.
    """
    inv = e.pos.inverse()
    source = tuple(inv.image[j] - 1 for j in range(16))
    rename = (0,) + e.rel.image
    return source, rename


def apply_values(e: SymmetryElement, values: tuple[int, ...]) -> tuple[int, ...]:
    source, rename = _action_table(e)
    return tuple(rename[values[i]] for i in source)


def apply(e: SymmetryElement, b: Board) -> Board:
    """Act on a board: move cells by e.pos, then rename values by e.rel."""
    return Board(apply_values(e, b.values))


def position_apply(x: Perm, values: tuple[int, ...]) -> tuple[int, ...]:
    """Apply a bare cell permutation (no relabeling)."""
    return apply_values(SymmetryElement.from_position(x), values)


def is_position_symmetry(x: Perm) -> bool:
    """True iff x maps every valid board to a valid board.

    This is the gate for user-supplied cell permutations; the named
    generators and their compositions satisfy it by construction.
    """
    return all(validate(position_apply(x, b.values)) for b in enumerate_all())


@dataclass(frozen=True)
class OrbitPartition:
    """Partition of a board set into orbit blocks.

    Blocks are sorted by minimal board; equality compares blocks only, so
    two partitions are equal iff they chop the boards the same way.
    """

    blocks: tuple[tuple[Board, ...], ...]
    index: dict[Board, int] = field(compare=False)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)

    def block_of(self, b: Board) -> int:
        return self.index[b]


def orbits(g: SymmetryGroup, boards: Sequence[Board] | None = None) -> OrbitPartition:
    """Orbit partition of the boards under g.

    Union-find over generator applications; generators suffice because
    orbits under a group equal connected components under its generators.
    """
    if boards is None:
        boards = enumerate_all()
    movers = g.generators if g.generators else tuple(g.elements)
    uf = UnionFind(boards)
    for e in movers:
        for b in boards:
            uf.union(b, apply(e, b))
    blocks = tuple(tuple(block) for block in uf.blocks())
    index = {b: k for k, block in enumerate(blocks) for b in block}
    return OrbitPartition(blocks, index)


@lru_cache(maxsize=1)
def full_partition() -> OrbitPartition:
    """Orbit partition of the full symmetry group: the Type 1 / Type 2 split."""
    return orbits(full_group())


def is_complete(g: SymmetryGroup) -> bool:
    """True iff g's orbits equal the full group's orbits block-for-block.

    Checked as partition equality against the full partition rather than
    as "two orbits": for subgroups the two agree, but partition equality
    also stays honest for arbitrary caller-supplied groups.
    """
    return orbits(g) == full_partition()


@dataclass(frozen=True)
class OrbitEdge:
    src: Board
    dst: Board
    label: str
    directed: bool


@dataclass(frozen=True)
class OrbitGraph:
    """Labeled multigraph of generator moves on a board set: one edge per
    (board, generator) pair, self-loops included.  Edges for involutions
    are marked undirected."""

    nodes: tuple[Board, ...]
    edges: tuple[OrbitEdge, ...]

    def components(self) -> list[list[Board]]:
        uf = UnionFind(self.nodes)
        for e in self.edges:
            uf.union(e.src, e.dst)
        return uf.blocks()

    @property
    def component_count(self) -> int:
        return len(self.components())


def orbit_graph(
    gens: Iterable[NamedElement | SymmetryElement],
    boards: Sequence[Board] | None = None,
) -> OrbitGraph:
    """Graph with one node per board and one labeled edge per
    (board, generator) application.

    Generators may be (label, element) pairs or bare elements, which get
    default labels.
    """
    if boards is None:
        boards = enumerate_all()
    named = tuple(
        (element_label(g), g) if isinstance(g, SymmetryElement) else (g[0], g[1])
        for g in gens
    )
    edges = []
    for name, e in named:
        directed = not (e * e).is_identity
        for b in boards:
            edges.append(OrbitEdge(b, apply(e, b), name, directed))
    return OrbitGraph(tuple(boards), tuple(edges))


def element_label(e: SymmetryElement) -> str:
    """Default edge label: single-letter names for the standard position
    generators, cycle notation otherwise."""
    standard = {gen_r(): "r", gen_r2(): "r2", gen_s(): "s", gen_t(): "t"}
    if e.rel.is_identity and e.pos in standard:
        return standard[e.pos]
    if e.pos.is_identity and not e.rel.is_identity:
        return e.rel.cycle_notation()
    if e.is_identity:
        return "id"
    return str(e)


def named_generators(g: SymmetryGroup) -> tuple[NamedElement, ...]:
    """A group's generators with their default edge labels."""
    return tuple((element_label(e), e) for e in g.generators)
