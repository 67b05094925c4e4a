"""Nests: board orbits under one symmetry factor, and the quotient graphs
induced on them by the other factor.

Relabeling-orbits ("value nests") have canonical representatives whose
upper-left block reads 1,2 / 3,4; there are twelve, labeled A-L.
Position-orbits ("position nests") have canonical representatives with 1s
on cells 1, 7, 10, 16, the cell-6 value <= the cell-11 value, and the
cell-2 value < the cell-5 value; there are six, labeled a-f in
lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .board import Board, block_of, coords, enumerate_all
from .perm import Perm, SymmetryElement, gen_r, gen_r2, gen_s, gen_t, grid_perm
from .action import apply_values, full_partition, position_apply
from .unionfind import UnionFind

#: Canonical representatives of the twelve relabeling-orbits (S4-nests).
S4_REPRESENTATIVES: dict[str, str] = {
    "A": "1234341241232341",
    "B": "1234341221434321",
    "C": "1243341221344321",
    "D": "1243342141322314",
    "E": "1234342121434312",
    "F": "1243342121344312",
    "G": "1234341243212143",
    "H": "1243341243212134",
    "I": "1234341223414123",
    "J": "1234342143122143",
    "K": "1243342143122134",
    "L": "1243342123144132",
}

#: Canonical representatives of the six position-orbits (H4-nests).
H4_REPRESENTATIVES: dict[str, str] = {
    "a": "1234341221434321",
    "b": "1234431221433421",
    "c": "1243431221343421",
    "d": "1324421331422431",
    "e": "1342421321343421",
    "f": "1342421331242431",
}

S4_NEST_LABELS = tuple(S4_REPRESENTATIVES)
H4_NEST_LABELS = tuple(H4_REPRESENTATIVES)


@dataclass(frozen=True)
class Nest:
    label: str
    representative: Board
    members: tuple[Board, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class NestEdge:
    """Induced generator move between nests.

    `aux` is the symmetry needed to return the moved representative to
    canonical form: a relabeling for position-generator edges, a position
    symmetry for relabeling-generator edges; None when no correction is
    needed.
    """

    src: str
    dst: str
    label: str
    aux: Perm | None
    directed: bool


@dataclass(frozen=True)
class NestGraph:
    nests: tuple[Nest, ...]
    edges: tuple[NestEdge, ...]

    def nest(self, label: str) -> Nest:
        for n in self.nests:
            if n.label == label:
                return n
        raise KeyError(label)

    def components(self) -> list[list[str]]:
        uf = UnionFind(n.label for n in self.nests)
        for e in self.edges:
            uf.union(e.src, e.dst)
        return uf.blocks()

    @property
    def component_count(self) -> int:
        return len(self.components())


def s4_canonicalize_with_relabeling(b: Board) -> tuple[Board, Perm]:
    """(canonical board, sigma) where sigma relabels b so the upper-left
    block reads 1,2 / 3,4 in row-major order."""
    image = [0] * 4
    for cell, target in ((1, 1), (2, 2), (5, 3), (6, 4)):
        image[b.value_at(cell) - 1] = target
    sigma = Perm(tuple(image))
    return Board(apply_values(SymmetryElement.from_relabeling(sigma), b.values)), sigma


def s4_canonicalize(b: Board) -> Board:
    """The unique relabeling of b whose upper-left block reads 1,2 / 3,4."""
    return s4_canonicalize_with_relabeling(b)[0]


def _ones_configuration_transform(b: Board) -> Perm:
    """Band-preserving row/column swaps moving b's 1s to cells 1, 7, 10, 16."""
    by_block: dict[int, tuple[int, int]] = {}
    for cell in b.cells_with(1):
        by_block[block_of(cell)] = coords(cell)
    if sorted(by_block) != [1, 2, 3, 4]:
        raise ValueError("board has no one-per-block configuration of 1s")
    (r1, c1), (r2, c2), (r3, c3), (r4, c4) = (by_block[k] for k in (1, 2, 3, 4))
    row_image = [0] * 4
    for row, target in ((r1, 1), (r2, 2), (r3, 3), (r4, 4)):
        row_image[row - 1] = target
    col_image = [0] * 4
    for col, target in ((c1, 1), (c3, 2), (c2, 3), (c4, 4)):
        col_image[col - 1] = target
    return grid_perm(Perm(tuple(row_image)), Perm(tuple(col_image)))


def h4_canonicalize_with_transform(b: Board) -> tuple[Board, Perm]:
    """(canonical board, x) where x is the position symmetry applied.

    Constructive: row/column swaps place the 1s on cells 1, 7, 10, 16,
    a half-turn then forces value(cell 6) <= value(cell 11), and a
    transpose forces value(cell 2) < value(cell 5).  Each step preserves
    what the previous steps established.
    """
    transform = _ones_configuration_transform(b)
    values = position_apply(transform, b.values)
    if values[5] > values[10]:
        transform = gen_r2() * transform
        values = position_apply(gen_r2(), values)
    if values[1] > values[4]:
        transform = gen_t() * transform
        values = position_apply(gen_t(), values)
    return Board(values), transform


def h4_canonicalize(b: Board) -> Board:
    """Canonical representative of b's position-orbit."""
    return h4_canonicalize_with_transform(b)[0]


def matches_h4_representative_form(b: Board) -> bool:
    """The defining predicate for position-nest representatives."""
    v = b.values
    return (
        v[0] == 1
        and v[6] == 1
        and v[9] == 1
        and v[15] == 1
        and v[5] <= v[10]
        and v[1] < v[4]
    )


def h4_orbit_canonical(b: Board) -> Board:
    """Definitional canonicalization: scan b's whole position-orbit for
    the unique member in representative form.

    Independent of the constructive path; the two are asserted equal over
    every board in the test suite.
    """
    gens = (gen_r(), gen_s(), gen_t())
    orbit = {b.values}
    frontier = [b.values]
    while frontier:
        new = []
        for values in frontier:
            for g in gens:
                moved = position_apply(g, values)
                if moved not in orbit:
                    orbit.add(moved)
                    new.append(moved)
        frontier = new
    matches = [values for values in orbit if matches_h4_representative_form(Board(values))]
    if len(matches) != 1:
        raise AssertionError(
            f"expected exactly one representative-form member, got {len(matches)}"
        )
    return Board(matches[0])


def _nests_by(canonical, labels_for) -> tuple[Nest, ...]:
    grouped: dict[Board, list[Board]] = {}
    for b in enumerate_all():
        grouped.setdefault(canonical(b), []).append(b)
    labeled = labels_for(grouped)
    return tuple(
        Nest(label, rep, tuple(sorted(grouped[rep])))
        for label, rep in sorted(labeled.items())
    )


@lru_cache(maxsize=1)
def s4_nests() -> tuple[Nest, ...]:
    """The twelve relabeling-orbits, labeled A-L, each of size 24."""

    def labels_for(grouped: dict[Board, list[Board]]) -> dict[str, Board]:
        want = {Board.from_text(text): label for label, text in S4_REPRESENTATIVES.items()}
        if set(grouped) != set(want):
            raise AssertionError("computed relabeling-orbit representatives changed")
        return {label: rep for rep, label in want.items()}

    return _nests_by(s4_canonicalize, labels_for)


@lru_cache(maxsize=1)
def h4_nests() -> tuple[Nest, ...]:
    """The six position-orbits, labeled a-f by lexicographic order of
    their representatives."""

    def labels_for(grouped: dict[Board, list[Board]]) -> dict[str, Board]:
        reps = sorted(grouped)
        labeled = dict(zip(H4_NEST_LABELS, reps))
        want = {label: Board.from_text(text) for label, text in H4_REPRESENTATIVES.items()}
        if labeled != want:
            raise AssertionError("computed position-orbit representatives changed")
        return labeled

    return _nests_by(h4_canonicalize, labels_for)


def s4_nest_of(b: Board) -> str:
    return _s4_label_index()[s4_canonicalize(b)]


def h4_nest_of(b: Board) -> str:
    return _h4_label_index()[h4_canonicalize(b)]


@lru_cache(maxsize=1)
def _s4_label_index() -> dict[Board, str]:
    return {n.representative: n.label for n in s4_nests()}


@lru_cache(maxsize=1)
def _h4_label_index() -> dict[Board, str]:
    return {n.representative: n.label for n in h4_nests()}


STANDARD_POSITION_NAMES = {"r": gen_r, "r2": gen_r2, "s": gen_s, "t": gen_t}


def _named(gens: Iterable, degree: int) -> tuple[tuple[str, Perm], ...]:
    """Normalize generators to (name, perm) pairs of the wanted degree."""
    named: list[tuple[str, Perm]] = []
    for g in gens:
        if isinstance(g, Perm):
            name = next(
                (n for n, f in STANDARD_POSITION_NAMES.items() if f() == g),
                g.cycle_notation() or "id",
            )
            named.append((name, g))
        else:
            named.append((g[0], g[1]))
    for name, p in named:
        if p.degree != degree:
            raise ValueError(f"generator {name!r} has degree {p.degree}, want {degree}")
    return tuple(named)


def s4_nest_graph(gens: Iterable) -> NestGraph:
    """Induced action of position generators on the twelve value nests.

    Each edge records the relabeling needed to return the moved
    representative to canonical form.
    """
    named = _named(gens, 16)
    nests = s4_nests()
    index = _s4_label_index()
    edges = []
    for name, g in named:
        directed = not (g * g).is_identity
        for n in nests:
            moved = Board(position_apply(g, n.representative.values))
            canon, sigma = s4_canonicalize_with_relabeling(moved)
            aux = None if sigma.is_identity else sigma
            edges.append(NestEdge(n.label, index[canon], name, aux, directed))
    return NestGraph(nests, tuple(edges))


def h4_nest_graph(gens: Iterable) -> NestGraph:
    """Induced action of relabeling generators on the six position nests.

    Each edge records the position symmetry needed to return the moved
    representative to canonical form.
    """
    named = _named(gens, 4)
    nests = h4_nests()
    index = _h4_label_index()
    edges = []
    for name, sigma in named:
        directed = not (sigma * sigma).is_identity
        for n in nests:
            moved = Board(
                apply_values(SymmetryElement.from_relabeling(sigma), n.representative.values)
            )
            canon, x = h4_canonicalize_with_transform(moved)
            aux = None if x.is_identity else x
            edges.append(NestEdge(n.label, index[canon], name, aux, directed))
    return NestGraph(nests, tuple(edges))


def completeness_via_nests(gens: Iterable) -> bool:
    """Completeness read off a nest graph.

    Degree-16 generators are taken as position generators acting on the
    value nests (testing <gens> x all-relabelings); degree-4 generators
    act on the position nests (testing all-position-symmetries x <gens>).
    True iff the graph has exactly two components whose member unions are
    the Type 1 and Type 2 classes.
    """
    gens = list(gens)
    if not gens:
        return False
    degrees = {g.degree if isinstance(g, Perm) else g[1].degree for g in gens}
    if degrees == {16}:
        graph = s4_nest_graph(gens)
    elif degrees == {4}:
        graph = h4_nest_graph(gens)
    else:
        raise ValueError("generators must be all degree 16 or all degree 4")
    components = graph.components()
    if len(components) != 2:
        return False
    unions = {
        frozenset(b for label in comp for b in graph.nest(label).members)
        for comp in components
    }
    full = {frozenset(block) for block in full_partition().blocks}
    return unions == full


def nest_partition(nests: Sequence[Nest]) -> set[frozenset[Board]]:
    """The partition of the board set carried by a nest list."""
    return {frozenset(n.members) for n in nests}
