"""Permutation algebra for the two symmetry factors.

Position symmetries are permutations of the 16 cells; relabelings are
permutations of the 4 values.  Both are `Perm` instances, distinguished
only by degree.

Composition convention (fixed everywhere in this package): the right
factor acts first, (a * b)(i) = a(b(i)).  A `SymmetryElement` (pos, rel)
acts on a board by first moving cells with `pos`, then renaming values
with `rel`.  Orbit and Burnside results depend on this convention, so it
is restated on every operation that composes or applies symmetries.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .board import cell_at, coords

POSITION_DEGREE = 16
RELABEL_DEGREE = 4


@dataclass(frozen=True, order=True)
class Perm:
    """A bijection on {1..n}, stored as the image tuple: image[i-1] = p(i).

    Ordering is lexicographic on the image, giving every finite set of
    permutations a canonical minimum.
    """

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"not a bijection on 1..{len(self.image)}: {self.image!r}")

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Perm":
        """Parse disjoint-cycle notation, e.g. '(2 5)(3 9)'.

        Unmentioned points are fixed; '' and '()' denote the identity.
        Raises ValueError on out-of-range or repeated elements.
        """
        text = text.strip()
        if text and not re.fullmatch(r"(\s*\(\s*[\d\s]*\)\s*)+", text):
            raise ValueError(f"malformed cycle notation: {text!r}")
        image = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle_body in re.findall(r"\(([^()]*)\)", text):
            elems = [int(tok) for tok in cycle_body.split()]
            for e in elems:
                if not 1 <= e <= degree:
                    raise ValueError(f"cycle element {e} out of range 1..{degree}")
                if e in seen:
                    raise ValueError(f"repeated element {e} in cycles {text!r}")
                seen.add(e)
            for a, b in zip(elems, elems[1:] + elems[:1]):
                image[a - 1] = b
        return cls(tuple(image))

    @property
    def degree(self) -> int:
        return len(self.image)

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.image, start=1))

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        """Compose, right factor first: (a * b)(i) = a(b(i))."""
        if self.degree != other.degree:
            raise ValueError("cannot compose permutations of different degrees")
        return Perm(tuple(self.image[j - 1] for j in other.image))

    def inverse(self) -> "Perm":
        img = [0] * self.degree
        for i, j in enumerate(self.image, start=1):
            img[j - 1] = i
        return Perm(tuple(img))

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity:
            p = p * self
            k += 1
        return k

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles of length >= 2, each starting at its smallest
        element, listed by smallest element."""
        out: list[tuple[int, ...]] = []
        seen: set[int] = set()
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_notation(self) -> str:
        """Canonical cycle string; fixed points omitted, identity -> ''."""
        return "".join("(" + " ".join(map(str, cyc)) + ")" for cyc in self.cycles())

    def __str__(self) -> str:
        return self.cycle_notation() or "()"


def grid_perm(row_perm: Perm, col_perm: Perm) -> Perm:
    """Cell permutation sending (i, j) to (row_perm(i), col_perm(j)).

    Only band-preserving row and pillar-preserving column permutations
    yield valid position symmetries; this constructor does not check that.
    """
    if row_perm.degree != 4 or col_perm.degree != 4:
        raise ValueError("grid_perm wants degree-4 row and column permutations")
    img = [0] * 16
    for cell in range(1, 17):
        r, c = coords(cell)
        img[cell - 1] = cell_at(row_perm(r), col_perm(c))
    return Perm(tuple(img))


@lru_cache(maxsize=1)
def gen_r() -> Perm:
    """Quarter-turn clockwise rotation: the value at (i, j) moves to (j, 5-i).

    Built geometrically from the coordinate map rather than a typed cycle
    list; tests pin it down via the r^4 = (tr)^2 = id relations.
    """
    img = [0] * 16
    for cell in range(1, 17):
        r, c = coords(cell)
        img[cell - 1] = cell_at(c, 5 - r)
    return Perm(tuple(img))


@lru_cache(maxsize=1)
def gen_s() -> Perm:
    """Swap of the third and fourth rows."""
    return grid_perm(Perm.from_cycles("(3 4)", 4), Perm.identity(4))


@lru_cache(maxsize=1)
def gen_t() -> Perm:
    """Transpose of the board: the value at (i, j) moves to (j, i)."""
    img = [0] * 16
    for cell in range(1, 17):
        r, c = coords(cell)
        img[cell - 1] = cell_at(c, r)
    return Perm(tuple(img))


@lru_cache(maxsize=1)
def gen_r2() -> Perm:
    """Half-turn rotation r*r."""
    return gen_r() * gen_r()


def relabeling(text: str) -> Perm:
    """Degree-4 permutation from cycle notation, e.g. '(1 2 3)'."""
    return Perm.from_cycles(text, RELABEL_DEGREE)


#: The overdetermined relabeling generator set used for graph edges.
RELABEL_GENERATOR_NAMES = ("(1 2)", "(2 3)", "(3 4)", "(1 4)")


def relabel_generators() -> tuple[Perm, ...]:
    return tuple(relabeling(name) for name in RELABEL_GENERATOR_NAMES)


@dataclass(frozen=True, order=True)
class SymmetryElement:
    """A combined symmetry (pos, rel): move cells by pos, then rename
    values by rel.  Composition is componentwise, right factor first."""

    pos: Perm
    rel: Perm

    def __post_init__(self) -> None:
        if self.pos.degree != POSITION_DEGREE or self.rel.degree != RELABEL_DEGREE:
            raise ValueError("symmetry element wants (degree-16, degree-4) parts")

    @classmethod
    def identity(cls) -> "SymmetryElement":
        return cls(Perm.identity(POSITION_DEGREE), Perm.identity(RELABEL_DEGREE))

    @classmethod
    def from_position(cls, pos: Perm) -> "SymmetryElement":
        return cls(pos, Perm.identity(RELABEL_DEGREE))

    @classmethod
    def from_relabeling(cls, rel: Perm) -> "SymmetryElement":
        return cls(Perm.identity(POSITION_DEGREE), rel)

    @property
    def is_identity(self) -> bool:
        return self.pos.is_identity and self.rel.is_identity

    def __mul__(self, other: "SymmetryElement") -> "SymmetryElement":
        return SymmetryElement(self.pos * other.pos, self.rel * other.rel)

    def inverse(self) -> "SymmetryElement":
        return SymmetryElement(self.pos.inverse(), self.rel.inverse())

    def __str__(self) -> str:
        return f"pos={self.pos.cycle_notation()}; rel={self.rel.cycle_notation()}"


def position_elements(perms: Iterable[Perm]) -> list[SymmetryElement]:
    return [SymmetryElement.from_position(p) for p in perms]


def relabel_elements(perms: Iterable[Perm]) -> list[SymmetryElement]:
    return [SymmetryElement.from_relabeling(p) for p in perms]
