"""Search over product-form subgroups for complete symmetry groups.

Candidates are direct products <P> x <R> for P, R subsets of finite
generator pools; the default pools are the rotation/half-turn/row-swap/
transpose position generators and the four standard transpositions plus
one 3-cycle of relabelings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .group import (
    SymmetryGroup,
    direct_product,
    generate_position,
    generate_relabel,
    position_group,
    relabel_group,
)
from .perm import Perm, gen_r, gen_r2, gen_s, gen_t, relabeling
from .action import full_partition, is_complete, orbits

NamedPerm = tuple[str, Perm]

MINIMAL_COMPLETE_ORDER = 192


def default_position_pool() -> tuple[NamedPerm, ...]:
    return (("r", gen_r()), ("r2", gen_r2()), ("s", gen_s()), ("t", gen_t()))


def default_relabel_pool() -> tuple[NamedPerm, ...]:
    names = ("(1 2)", "(2 3)", "(3 4)", "(1 4)", "(1 2 3)")
    return tuple((name, relabeling(name)) for name in names)


def minimal_order() -> int:
    """Lower bound for the order of any complete group: the largest orbit
    of the full group (a complete group acts transitively on it)."""
    return max(full_partition().sizes())


@dataclass(frozen=True)
class SearchResult:
    position_names: tuple[str, ...]
    relabel_names: tuple[str, ...]
    position_gens: tuple[Perm, ...]
    relabel_gens: tuple[Perm, ...]
    order: int
    orbit_count: int
    complete: bool

    @property
    def minimal(self) -> bool:
        return self.complete and self.order == MINIMAL_COMPLETE_ORDER

    @property
    def label(self) -> str:
        pos = ",".join(self.position_names) or "-"
        rel = ",".join(self.relabel_names) or "-"
        return f"<{pos}> x <{rel}>"


def _subsets(pool: tuple[NamedPerm, ...]):
    """All subsets, smallest first so deduplication keeps minimal generator sets."""
    for size in range(len(pool) + 1):
        yield from combinations(pool, size)


def search_products(
    position_pool: tuple[NamedPerm, ...] | None = None,
    relabel_pool: tuple[NamedPerm, ...] | None = None,
) -> tuple[SearchResult, ...]:
    """Evaluate every (position subset, relabel subset) pair as a direct
    product.

    Results are deduplicated by the underlying element sets (the first,
    smallest generating subsets win) and sorted by (order, label).
    """
    if position_pool is None:
        position_pool = default_position_pool()
    if relabel_pool is None:
        relabel_pool = default_relabel_pool()

    position_groups = [
        (subset, generate_position(p for _, p in subset))
        for subset in _subsets(position_pool)
    ]
    relabel_groups = [
        (subset, generate_relabel(p for _, p in subset))
        for subset in _subsets(relabel_pool)
    ]

    seen: set[tuple[frozenset, frozenset]] = set()
    results: list[SearchResult] = []
    for pos_subset, pos_group in position_groups:
        for rel_subset, rel_group in relabel_groups:
            key = (pos_group.elements, rel_group.elements)
            if key in seen:
                continue
            seen.add(key)
            product = direct_product(pos_group, rel_group)
            partition = orbits(product)
            results.append(
                SearchResult(
                    position_names=tuple(name for name, _ in pos_subset),
                    relabel_names=tuple(name for name, _ in rel_subset),
                    position_gens=tuple(p for _, p in pos_subset),
                    relabel_gens=tuple(p for _, p in rel_subset),
                    order=product.order,
                    orbit_count=partition.block_count,
                    complete=partition == full_partition(),
                )
            )
    return tuple(sorted(results, key=lambda res: (res.order, res.label)))


def verify_no_single_factor(g: SymmetryGroup) -> bool:
    """Standing assertion that completeness requires mixing the factors.

    True iff g, when complete, contains both a nontrivial position part
    and a nontrivial relabel part.  Single-factor groups (all position
    symmetries alone, order 128; all relabelings alone, order 24) fall
    below the order-192 bound and are never complete.
    """
    if not is_complete(g):
        return True
    has_position = any(not e.pos.is_identity for e in g.elements)
    has_relabel = any(not e.rel.is_identity for e in g.elements)
    return has_position and has_relabel


@lru_cache(maxsize=1)
def single_factor_groups() -> tuple[SymmetryGroup, SymmetryGroup]:
    """(all position symmetries, all relabelings), each as a group on its own."""
    return position_group(), relabel_group()


def parse_pool_file(text: str, degree: int) -> tuple[NamedPerm, ...]:
    """Parse a generator pool file: one 'name=<cycles>' entry per line.

    Blank lines and '#' comments are ignored.
    """
    pool: list[NamedPerm] = []
    for line in text.split("\n"):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"bad pool line (want 'name=<cycles>'): {line!r}")
        name, cycles = (part.strip() for part in line.split("=", 1))
        if not name:
            raise ValueError(f"bad pool line (empty name): {line!r}")
        pool.append((name, Perm.from_cycles(cycles, degree)))
    if not pool:
        raise ValueError("pool file defines no generators")
    return tuple(pool)
