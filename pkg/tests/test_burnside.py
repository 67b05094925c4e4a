import pytest

from shidoku.board import Board, enumerate_all
from shidoku.perm import Perm, SymmetryElement, gen_r, gen_r2, gen_s, gen_t, relabeling
from shidoku.group import (
    SymmetryGroup,
    direct_product,
    generate_position,
    generate_relabel,
    position_group,
    relabel_group,
    trivial_group,
)
from shidoku.action import orbits
from shidoku.burnside import (
    burnside_orbit_count,
    check_fixing_lemmas,
    cross_check_orbit_count,
    fixed_points,
    invariance_table,
    invariant_count,
    relabel_recovery,
)
from helpers import INVARIANT_UNDER_TRANSPOSE_TEXT, oracle_apply, oracle_recoveries

FIG_BOARD = Board.from_text(INVARIANT_UNDER_TRANSPOSE_TEXT)

# (size, invariant count) rows of the 20-class table for the full position
# group, frozen from an exhaustive scan; they sum to 2 * 3072 as the
# two-orbit count demands.
POSITION_GROUP_TABLE = sorted(
    [
        (1, 288), (4, 0), (4, 0), (8, 48), (16, 0),
        (2, 192), (4, 96), (8, 48), (4, 144), (8, 48),
        (4, 96), (8, 0), (16, 48), (16, 0), (1, 96),
        (4, 240), (4, 0), (4, 192), (8, 48), (4, 0),
    ]
)


def test_recovery_for_transpose_invariant_board():
    sigma = relabel_recovery(gen_t(), FIG_BOARD)
    assert sigma is not None
    assert sigma.cycle_notation() == "(2 3)"


def test_recovery_identity_position():
    for b in enumerate_all()[:10]:
        assert relabel_recovery(Perm.identity(16), b) == Perm.identity(4)


def test_row_swap_recovers_nothing():
    assert all(relabel_recovery(gen_s(), b) is None for b in enumerate_all())


def test_recovery_matches_brute_force_oracle():
    members = generate_position([gen_s(), gen_t()]).sorted_elements()
    for e in members:
        for b in enumerate_all():
            brute = oracle_recoveries(e.pos, b)
            assert len(brute) <= 1  # relabelings act freely
            got = relabel_recovery(e.pos, b)
            assert got == (brute[0] if brute else None)


def test_invariant_counts():
    s = SymmetryElement.from_position(gen_s())
    t = SymmetryElement.from_position(gen_t())
    assert invariant_count(Perm.identity(16)) == 288
    assert invariant_count(gen_t()) == 48
    assert invariant_count(gen_s()) == 0
    assert invariant_count((s * t).pos) == 0
    assert invariant_count(((s * t) * (s * t)).pos) == 0


def test_fixed_points():
    assert fixed_points(SymmetryElement.identity()) == 288
    t23 = SymmetryElement(gen_t(), relabeling("(2 3)"))
    brute = sum(1 for b in enumerate_all() if oracle_apply(t23, b.values) == b.values)
    assert fixed_points(t23) == brute == 8
    assert fixed_points(SymmetryElement.from_position(gen_s())) == 0
    assert fixed_points(SymmetryElement.from_position(gen_r2())) == 24


def test_transpose_with_swap_fixes_the_pinned_board():
    t23 = SymmetryElement(gen_t(), relabeling("(2 3)"))
    from shidoku.action import apply

    assert apply(t23, FIG_BOARD) == FIG_BOARD


def test_fixed_point_decomposition():
    # summing over all relabelings recovers the invariant count
    relabelings = [SymmetryElement.from_relabeling(e.rel) for e in relabel_group().elements]
    for x in (Perm.identity(16), gen_s(), gen_t(), gen_r(), gen_r2()):
        total = sum(fixed_points(SymmetryElement(x, e.rel)) for e in relabelings)
        assert total == invariant_count(x)


def test_burnside_counts():
    st = generate_position([gen_s(), gen_t()])
    assert burnside_orbit_count(direct_product(st, relabel_group())) == 2
    assert burnside_orbit_count(trivial_group()) == 288
    rt = generate_position([gen_r(), gen_t()])
    assert burnside_orbit_count(direct_product(rt, relabel_group())) == 5
    c123 = generate_relabel([relabeling("(1 2 3)")])
    assert burnside_orbit_count(direct_product(position_group(), c123)) == 2


def test_burnside_matches_direct_orbits():
    st = generate_position([gen_s(), gen_t()])
    for g in (
        direct_product(st, relabel_group()),
        direct_product(generate_position([gen_r(), gen_t()]), relabel_group()),
        trivial_group(),
    ):
        b, d = cross_check_orbit_count(g)
        assert b == d == orbits(g).block_count


def test_burnside_rejects_non_groups():
    # not closed under composition; fixed-point total 312 is not divisible by 5
    r = gen_r()
    fake = SymmetryGroup(
        frozenset(
            SymmetryElement.from_position(p)
            for p in (Perm.identity(16), r, r * r, r * r * r, gen_s())
        ),
        (),
    )
    with pytest.raises(ValueError):
        burnside_orbit_count(fake)


def test_invariance_table_swap_transpose():
    table = invariance_table(generate_position([gen_s(), gen_t()]))
    rows = sorted((cls.size, count) for cls, count in table.rows)
    assert rows == [(1, 0), (1, 288), (2, 0), (2, 0), (2, 48)]
    assert table.total_fixed_points() == 384


def test_invariance_table_trivial():
    table = invariance_table(trivial_group())
    assert [(cls.size, count) for cls, count in table.rows] == [(1, 288)]


def test_invariance_table_full_position_group():
    table = invariance_table(position_group())
    assert len(table.rows) == 20
    assert sorted((cls.size, count) for cls, count in table.rows) == POSITION_GROUP_TABLE
    # Burnside consistency: the table total over the product order gives 2
    assert table.total_fixed_points() == 2 * 3072


def test_invariance_table_rejects_mixed_group():
    with pytest.raises(ValueError):
        invariance_table(relabel_group())


def test_invariant_count_constant_on_classes():
    s = SymmetryElement.from_position(gen_s())
    t = SymmetryElement.from_position(gen_t())
    sts = (s * t) * s
    tst = (t * s) * t
    assert invariant_count(gen_t()) == invariant_count(sts.pos) == 48
    assert invariant_count(gen_s()) == invariant_count(tst.pos) == 0


def test_fixing_rules_hold_on_examples():
    assert check_fixing_lemmas(gen_t(), FIG_BOARD)
    for b in enumerate_all()[:20]:
        assert check_fixing_lemmas(Perm.identity(16), b)


def test_fixing_rules_require_invariance():
    with pytest.raises(ValueError):
        check_fixing_lemmas(gen_s(), FIG_BOARD)


def test_fixing_rules_over_small_group():
    # the exhaustive 128 x 288 scan lives in the acceptance suite
    for e in generate_position([gen_s(), gen_t()]).sorted_elements():
        for b in enumerate_all():
            if relabel_recovery(e.pos, b) is not None:
                assert check_fixing_lemmas(e.pos, b)
