"""End-to-end reproduction checks for the package's headline results.

Each check is exact (integer counts, set equality); there are no
tolerances anywhere.  The CLI `verify` subcommand and the acceptance
test module both run this list.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .board import Board, count_with_ones_configuration, enumerate_all, validate
from .perm import (
    Perm,
    SymmetryElement,
    gen_r,
    gen_r2,
    gen_s,
    gen_t,
    position_elements,
    relabel_generators,
    relabeling,
)
from .group import (
    direct_product,
    full_group,
    generate_position,
    generate_relabel,
    position_group,
    relabel_group,
    trivial_group,
)
from .action import apply, full_partition, is_complete, named_generators, orbit_graph, orbits
from .burnside import (
    burnside_orbit_count,
    check_fixing_lemmas,
    invariance_table,
    invariant_count,
    relabel_recovery,
)
from .nests import (
    H4_REPRESENTATIVES,
    S4_REPRESENTATIVES,
    completeness_via_nests,
    h4_nest_graph,
    h4_nests,
    nest_partition,
    s4_nest_graph,
    s4_nest_of,
    s4_nests,
)
from .search import default_relabel_pool, minimal_order

TYPE1_REPRESENTATIVE = "1234341221434321"
TYPE2_REPRESENTATIVE = "1234341223414123"


def expect(condition: bool, message: str) -> None:
    if not condition:
        raise AssertionError(message)


def check_board_count() -> None:
    """Enumeration yields exactly 288 boards."""
    expect(len(enumerate_all()) == 288, f"expected 288 boards, got {len(enumerate_all())}")


def check_group_orders() -> None:
    """Generated subgroup orders: <r,s,t>=128, <r,t>=8, <r,s>=64, <s,t>=8, full=3072."""
    r, s, t = gen_r(), gen_s(), gen_t()
    for name, gens, want in (
        ("r,s,t", (r, s, t), 128),
        ("r,t", (r, t), 8),
        ("r,s", (r, s), 64),
        ("s,t", (s, t), 8),
    ):
        got = generate_position(gens).order
        expect(got == want, f"|<{name}>|: got {got}, want {want}")
    expect(full_group().order == 3072, f"full group order {full_group().order} != 3072")


def check_full_orbits() -> None:
    """The full group splits the boards into orbits of 96 and 192, separating
    the two representative boards."""
    part = full_partition()
    expect(part.sizes() == (96, 192), f"full orbit sizes {part.sizes()} != (96, 192)")
    b1 = Board.from_text(TYPE1_REPRESENTATIVE)
    b2 = Board.from_text(TYPE2_REPRESENTATIVE)
    expect(
        part.block_of(b1) != part.block_of(b2),
        "Type 1 and Type 2 representatives landed in the same orbit",
    )


def check_rotation_transpose_product() -> None:
    """<r,t> x S4 has order 192 but five orbits (minimal without being complete)."""
    g = direct_product(generate_position([gen_r(), gen_t()]), relabel_group())
    expect(g.order == 192, f"|<r,t> x S4| = {g.order} != 192")
    count = orbits(g).block_count
    expect(count == 5, f"<r,t> x S4 orbit count {count} != 5")
    expect(not is_complete(g), "<r,t> x S4 should not be complete")


def check_complete_products() -> None:
    """The three order-192 complete products, plus the order-384 one."""
    c123 = generate_relabel([relabeling("(1 2 3)")])
    cases = (
        ("<r,s> x <(123)>", direct_product(generate_position([gen_r(), gen_s()]), c123), 192),
        ("<s,t> x S4", direct_product(generate_position([gen_s(), gen_t()]), relabel_group()), 192),
        ("<r2,s,t> x <(123)>", direct_product(generate_position([gen_r2(), gen_s(), gen_t()]), c123), 192),
        ("full positions x <(123)>", direct_product(position_group(), c123), 384),
    )
    for name, g, want_order in cases:
        expect(g.order == want_order, f"{name}: order {g.order} != {want_order}")
        expect(is_complete(g), f"{name}: expected complete")


def check_swap_transpose_classes() -> None:
    """<s,t> has classes {id},{s,tst},{t,sts},{st,ts},{stst} with invariant
    board counts 288, 0, 48, 0, 0."""
    s = SymmetryElement.from_position(gen_s())
    t = SymmetryElement.from_position(gen_t())
    identity = SymmetryElement.identity()
    st, ts = s * t, t * s
    sts, tst = s * t * s, t * s * t
    stst = st * st
    group = generate_position([gen_s(), gen_t()])
    expect(
        group.elements == frozenset({identity, s, t, st, ts, sts, tst, stst}),
        "<s,t> element set is not {id, s, t, st, ts, sts, tst, stst}",
    )
    want = {
        frozenset({identity}): 288,
        frozenset({s, tst}): 0,
        frozenset({t, sts}): 48,
        frozenset({st, ts}): 0,
        frozenset({stst}): 0,
    }
    table = invariance_table(group)
    got = {cls.members: count for cls, count in table.rows}
    expect(got == want, f"conjugacy classes or invariant counts differ: {got}")


def check_burnside_cross() -> None:
    """Burnside count equals direct orbit count on five groups, and the
    <s,t> x S4 computation reproduces term by term: total 384 over 192 = 2."""
    s_el = SymmetryElement.from_position(gen_s())
    t_el = SymmetryElement.from_position(gen_t())
    st_group = generate_position([gen_s(), gen_t()])
    c123 = generate_relabel([relabeling("(1 2 3)")])
    groups = (
        ("full", full_group()),
        ("<s,t> x S4", direct_product(st_group, relabel_group())),
        ("<r,t> x S4", direct_product(generate_position([gen_r(), gen_t()]), relabel_group())),
        ("positions x <(123)>", direct_product(position_group(), c123)),
        ("trivial", trivial_group()),
    )
    for name, g in groups:
        b = burnside_orbit_count(g)
        d = orbits(g).block_count
        expect(b == d, f"{name}: burnside {b} != direct {d}")

    table = invariance_table(st_group)
    by_member: dict[SymmetryElement, tuple[int, int]] = {}
    for cls, count in table.rows:
        for member in cls.members:
            by_member[member] = (cls.size, count)
    identity = SymmetryElement.identity()
    want_terms = {
        identity: (1, 288),
        s_el: (2, 0),
        t_el: (2, 48),
        s_el * t_el: (2, 0),
        (s_el * t_el) * (s_el * t_el): (1, 0),
    }
    for element, term in want_terms.items():
        expect(
            by_member[element] == term,
            f"term for {element.pos.cycle_notation() or '()'}: {by_member[element]} != {term}",
        )
    total = table.total_fixed_points()
    order = st_group.order * relabel_group().order
    expect(total == 384, f"fixed-point total {total} != 384")
    expect(order == 192, f"group order {order} != 192")
    expect(total // order == 2, f"{total}/{order} != 2")


def check_nests() -> None:
    """Twelve size-24 value nests and six position nests (32/64/32/64/64/32)
    with the expected canonical representatives; half-turn/swap/transpose
    position orbits coincide with the position nests."""
    value_nests = s4_nests()
    expect(len(value_nests) == 12, f"value nest count {len(value_nests)} != 12")
    expect(all(n.size == 24 for n in value_nests), "value nests must all have size 24")
    got_s4 = {n.label: n.representative.text for n in value_nests}
    expect(got_s4 == S4_REPRESENTATIVES, f"value nest representatives differ: {got_s4}")

    position_nests = h4_nests()
    want_sizes = {"a": 32, "b": 64, "c": 32, "d": 64, "e": 64, "f": 32}
    got_sizes = {n.label: n.size for n in position_nests}
    expect(got_sizes == want_sizes, f"position nest sizes {got_sizes} != {want_sizes}")
    got_h4 = {n.label: n.representative.text for n in position_nests}
    expect(got_h4 == H4_REPRESENTATIVES, f"position nest representatives differ: {got_h4}")

    r2st = generate_position([gen_r2(), gen_s(), gen_t()])
    r2st_partition = {frozenset(block) for block in orbits(r2st).blocks}
    expect(
        r2st_partition == nest_partition(position_nests),
        "<r2,s,t> orbits differ from the position nests",
    )


def check_nest_graph_components() -> None:
    """Component counts of the quotient graphs: {s,t} gives 2 (sizes 8 and 4),
    {r,t} gives 5; {(12),(23)} and {(123)} each give 2."""
    g = s4_nest_graph([gen_s(), gen_t()])
    sizes = sorted(len(c) for c in g.components())
    expect(sizes == [4, 8], f"{{s,t}} component sizes {sizes} != [4, 8]")
    count = s4_nest_graph([gen_r(), gen_t()]).component_count
    expect(count == 5, f"{{r,t}} component count {count} != 5")
    count = h4_nest_graph([relabeling("(1 2)"), relabeling("(2 3)")]).component_count
    expect(count == 2, f"{{(12),(23)}} component count {count} != 2")
    count = h4_nest_graph([relabeling("(1 2 3)")]).component_count
    expect(count == 2, f"{{(123)}} component count {count} != 2")


def check_quotient_consistency() -> None:
    """Completeness via nest-graph components agrees with direct orbit
    computation for every subset of {r, r2, s, t} (paired with all
    relabelings) and every subset of the relabeling pool (paired with all
    position symmetries)."""
    from itertools import combinations

    position_pool = (("r", gen_r()), ("r2", gen_r2()), ("s", gen_s()), ("t", gen_t()))
    for size in range(len(position_pool) + 1):
        for subset in combinations(position_pool, size):
            perms = [p for _, p in subset]
            via_nests = completeness_via_nests(perms) if perms else False
            direct = is_complete(direct_product(generate_position(perms), relabel_group()))
            expect(
                via_nests == direct,
                f"position gens {[n for n, _ in subset]}: nests say {via_nests}, orbits say {direct}",
            )
    relabel_pool = default_relabel_pool()
    for size in range(len(relabel_pool) + 1):
        for subset in combinations(relabel_pool, size):
            perms = [p for _, p in subset]
            via_nests = completeness_via_nests(perms) if perms else False
            direct = is_complete(direct_product(position_group(), generate_relabel(perms)))
            expect(
                via_nests == direct,
                f"relabel gens {[n for n, _ in subset]}: nests say {via_nests}, orbits say {direct}",
            )


def check_fixing_rules_exhaustive() -> None:
    """The three fixing rules hold for every (position symmetry, invariant
    board) pair: a 128 x 288 scan."""
    pairs = 0
    for e in position_group().sorted_elements():
        for b in enumerate_all():
            if relabel_recovery(e.pos, b) is None:
                continue
            pairs += 1
            expect(
                check_fixing_lemmas(e.pos, b),
                f"fixing rules fail for x={e.pos.cycle_notation() or '()'} on {b.text}",
            )
    expect(pairs > 0, "no invariant pairs found; the scan is broken")


def check_ones_configuration() -> None:
    """Exactly 18 boards put their 1s on cells 1, 7, 10, 16."""
    count = count_with_ones_configuration({1, 7, 10, 16})
    expect(count == 18, f"ones-configuration count {count} != 18")


def check_action_and_relations() -> None:
    """Generator relations and action laws.

    Relations: r^4 = s^2 = t^2 = (tr)^2 = (ts)^4 = (srsr^3)^2 = id and
    r^2 s r t s r^3 t = id, composed right factor first.  Action laws:
    the identity fixes every board; every generator sends every board to
    a valid board; apply(a * b, board) == apply(a, apply(b, board)) for
    every generator a and every full-group element b on the two orbit
    representatives (which extends to all pairs by induction on word
    length), and for all element pairs of the minimal complete group
    <s,t> x S4 on the Type 1 representative.
    """
    r, s, t = gen_r(), gen_s(), gen_t()

    def word(*letters: Perm) -> Perm:
        out = Perm.identity(16)
        for letter in letters:
            out = out * letter
        return out

    relations = {
        "r^4": word(r, r, r, r),
        "s^2": word(s, s),
        "t^2": word(t, t),
        "(tr)^2": word(t, r, t, r),
        "r^2 s r t s r^3 t": word(r, r, s, r, t, s, r, r, r, t),
        "(ts)^4": word(t, s, t, s, t, s, t, s),
        "(srsr^3)^2": word(s, r, s, r, r, r, s, r, s, r, r, r),
    }
    for name, value in relations.items():
        expect(value.is_identity, f"relation {name} does not hold: {value.cycle_notation()}")

    boards = enumerate_all()
    identity = SymmetryElement.identity()
    for b in boards:
        expect(apply(identity, b) == b, f"identity moved board {b.text}")

    generators = position_elements([r, s, t]) + [
        SymmetryElement.from_relabeling(p) for p in relabel_generators()
    ]
    for e in generators:
        for b in boards:
            expect(validate(apply(e, b).values), f"generator broke board {b.text}")

    reps = (Board.from_text(TYPE1_REPRESENTATIVE), Board.from_text(TYPE2_REPRESENTATIVE))
    full_elements = full_group().sorted_elements()
    for a in generators:
        for b_el in full_elements:
            ab = a * b_el
            for board in reps:
                expect(
                    apply(ab, board) == apply(a, apply(b_el, board)),
                    f"action law fails for generator pair on {board.text}",
                )

    minimal = direct_product(
        generate_position([s, t]), relabel_group()
    ).sorted_elements()
    type1 = reps[0]
    for a in minimal:
        for b_el in minimal:
            expect(
                apply(a * b_el, type1) == apply(a, apply(b_el, type1)),
                "action law fails inside <s,t> x S4",
            )


def check_pinned_examples() -> None:
    """Remaining pinned facts not already under checks 1-13: generator
    cycle forms, the transpose-invariance example board, the 20-row
    invariance table, orbit-graph component counts, the known induced nest
    moves, and the order-192 completeness bound."""
    expect(
        gen_t().cycle_notation() == "(2 5)(3 9)(4 13)(7 10)(8 14)(12 15)",
        f"transpose cycle form changed: {gen_t().cycle_notation()}",
    )
    expect(
        gen_s().cycle_notation() == "(9 13)(10 14)(11 15)(12 16)",
        f"row-swap cycle form changed: {gen_s().cycle_notation()}",
    )
    expect(
        Perm.from_cycles("(9 13)(10 14)(11 15)(12 16)", 16) == gen_s(),
        "cycle parsing does not reproduce the row swap",
    )

    type1 = Board.from_text(TYPE1_REPRESENTATIVE)
    nest_a_rep = Board.from_text(S4_REPRESENTATIVES["A"])
    expect(validate(type1.values), "Type 1 representative is not a valid board")
    expect(validate(nest_a_rep.values), "nest A representative is not a valid board")
    expect(
        s4_nest_of(Board.from_text(TYPE2_REPRESENTATIVE)) == "I",
        "Type 2 representative is not in value nest I",
    )

    invariant_board = Board.from_text("1243342143122134")
    t_el = SymmetryElement.from_position(gen_t())
    expect(
        apply(t_el, invariant_board).text == "1342243142133124",
        "transpose image of the invariance example board changed",
    )
    sigma = relabel_recovery(gen_t(), invariant_board)
    expect(
        sigma is not None and sigma.cycle_notation() == "(2 3)",
        "recovering relabeling for the invariance example is not (2 3)",
    )
    expect(
        apply(SymmetryElement(gen_t(), sigma), invariant_board) == invariant_board,
        "(transpose, (2 3)) does not fix the invariance example board",
    )

    expect(invariant_count(Perm.identity(16)) == 12 * 24, "identity invariant count != 12*4!")
    expect(invariant_count(gen_t()) == 2 * 24, "transpose invariant count != 2*4!")
    expect(invariant_count(gen_s()) == 0, "row-swap invariant count != 0")

    expect(
        len(invariance_table(position_group()).rows) == 20,
        "full position group table does not have 20 conjugacy-class rows",
    )

    graph = orbit_graph(named_generators(full_group()))
    expect(
        sorted(len(c) for c in graph.components()) == [96, 192],
        "full orbit graph components are not 96 and 192 boards",
    )
    rt_s4 = direct_product(generate_position([gen_r(), gen_t()]), relabel_group())
    expect(
        orbit_graph(named_generators(rt_s4)).component_count == 5,
        "<r,t> x S4 orbit graph does not have 5 components",
    )
    expect(
        orbit_graph(named_generators(position_group())).component_count == 6,
        "position-only orbit graph does not have 6 components",
    )

    s4_graph = s4_nest_graph([gen_r(), gen_s(), gen_t()])
    moves = {(e.label, e.src): e.dst for e in s4_graph.edges}
    expect(moves[("t", "A")] == "C", "t does not move nest A to nest C")
    expect(moves[("s", "C")] == "H", "s does not move nest C to nest H")
    expect(
        all(
            e.aux is not None and e.aux.cycle_notation() == "(2 3)"
            for e in s4_graph.edges
            if e.label == "t"
        ),
        "a t-edge needs a relabeling other than (2 3)",
    )
    expect(
        all(e.aux is None for e in s4_graph.edges if e.label == "s"),
        "an s-edge needed a relabeling",
    )
    h4_graph = h4_nest_graph([relabeling("(3 4)"), relabeling("(2 3)")])
    hmoves = {(e.label, e.src): (e.dst, e.aux) for e in h4_graph.edges}
    expect(hmoves[("(3 4)", "a")] == ("c", None), "(3 4) does not send nest a straight to c")
    expect(
        hmoves[("(2 3)", "a")] == ("a", gen_t()),
        "(2 3) on nest a should loop back via the transpose",
    )

    expect(minimal_order() == 192, f"completeness bound {minimal_order()} != 192")


@dataclass(frozen=True)
class Check:
    number: int
    name: str
    run: Callable[[], None]
    description: str


def all_checks() -> tuple[Check, ...]:
    checks = (
        (1, "board-count", check_board_count),
        (2, "group-orders", check_group_orders),
        (3, "full-group-orbits", check_full_orbits),
        (4, "rotation-transpose-product", check_rotation_transpose_product),
        (5, "complete-products", check_complete_products),
        (6, "swap-transpose-classes", check_swap_transpose_classes),
        (7, "burnside-cross-check", check_burnside_cross),
        (8, "nests", check_nests),
        (9, "nest-graph-components", check_nest_graph_components),
        (10, "quotient-consistency", check_quotient_consistency),
        (11, "fixing-rules", check_fixing_rules_exhaustive),
        (12, "ones-configuration", check_ones_configuration),
        (13, "action-and-relations", check_action_and_relations),
        (14, "pinned-examples", check_pinned_examples),
    )
    return tuple(
        Check(number, name, fn, (fn.__doc__ or "").strip().split("\n")[0])
        for number, name, fn in checks
    )


def run_checks(write: Callable[[str], None] = print) -> bool:
    """Run every check, print one pass/fail line each; True iff all pass."""
    ok = True
    for check in all_checks():
        try:
            check.run()
        except Exception as exc:  # report and continue; verify must see all
            ok = False
            write(f"FAIL {check.number:2d} {check.name}: {exc}")
        else:
            write(f"ok   {check.number:2d} {check.name}")
    return ok
