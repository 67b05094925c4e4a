import pytest

from shidoku.board import Board, enumerate_all
from shidoku.perm import gen_r, gen_r2, gen_s, gen_t, relabeling
from shidoku.group import generate_position, relabel_group
from shidoku.action import apply, full_partition, orbits, position_apply
from shidoku.perm import SymmetryElement
from shidoku.nests import (
    H4_REPRESENTATIVES,
    S4_REPRESENTATIVES,
    completeness_via_nests,
    h4_canonicalize,
    h4_canonicalize_with_transform,
    h4_nest_graph,
    h4_nest_of,
    h4_nests,
    h4_orbit_canonical,
    matches_h4_representative_form,
    nest_partition,
    s4_canonicalize,
    s4_canonicalize_with_relabeling,
    s4_nest_graph,
    s4_nest_of,
    s4_nests,
)
from helpers import INVARIANT_UNDER_TRANSPOSE_TEXT, TYPE1_TEXT, TYPE2_TEXT


def test_s4_canonicalize_fixes_canonical_boards():
    for text in S4_REPRESENTATIVES.values():
        b = Board.from_text(text)
        canon, sigma = s4_canonicalize_with_relabeling(b)
        assert canon == b and sigma.is_identity
    assert s4_canonicalize(Board.from_text(INVARIANT_UNDER_TRANSPOSE_TEXT)).text == INVARIANT_UNDER_TRANSPOSE_TEXT


def test_s4_canonicalize_type2_is_nest_i():
    b = Board.from_text(TYPE2_TEXT)
    assert s4_canonicalize(b) == b
    assert s4_nest_of(b) == "I"


def test_s4_canonicalize_constant_on_relabeling_orbits():
    for text in S4_REPRESENTATIVES.values():
        rep = Board.from_text(text)
        for e in relabel_group().sorted_elements():
            assert s4_canonicalize(apply(e, rep)) == rep


def test_s4_nests_golden():
    nests = s4_nests()
    assert [n.label for n in nests] == list("ABCDEFGHIJKL")
    assert all(n.size == 24 for n in nests)
    assert {n.label: n.representative.text for n in nests} == S4_REPRESENTATIVES
    union = {b for n in nests for b in n.members}
    assert union == set(enumerate_all())
    for n in nests:
        assert n.representative in n.members


def test_s4_nest_graph_known_edges():
    graph = s4_nest_graph([gen_r(), gen_s(), gen_t()])
    t_edges = {(e.src, e.dst) for e in graph.edges if e.label == "t"}
    assert ("A", "C") in t_edges
    s_edges = {(e.src, e.dst) for e in graph.edges if e.label == "s"}
    assert ("C", "H") in s_edges
    # the correcting relabeling is always (2 3) for t and nothing for s
    for e in graph.edges:
        if e.label == "t":
            assert e.aux is not None and e.aux.cycle_notation() == "(2 3)"
        if e.label == "s":
            assert e.aux is None


def test_s4_nest_graph_components():
    graph = s4_nest_graph([gen_s(), gen_t()])
    components = {frozenset(c) for c in graph.components()}
    assert components == {
        frozenset("ACDEHIJL"),
        frozenset("BFGK"),
    }
    assert s4_nest_graph([gen_r(), gen_t()]).component_count == 5
    assert s4_nest_graph(()).component_count == 12


def test_s4_nest_graph_well_defined_on_all_members():
    # the induced move must not depend on which member the generator hits
    for name, gen in (("r", gen_r()), ("s", gen_s()), ("t", gen_t())):
        graph = s4_nest_graph([(name, gen)])
        targets = {e.src: e.dst for e in graph.edges}
        for nest in graph.nests:
            for member in nest.members:
                moved = Board(position_apply(gen, member.values))
                assert s4_nest_of(moved) == targets[nest.label]


def test_h4_form_predicate_and_canonical_fixed_points():
    for text in H4_REPRESENTATIVES.values():
        b = Board.from_text(text)
        assert matches_h4_representative_form(b)
        assert h4_canonicalize(b) == b


def test_h4_canonicalize_half_turn_returns():
    a = Board.from_text(H4_REPRESENTATIVES["a"])
    rotated = Board(position_apply(gen_r2(), a.values))
    assert h4_canonicalize(rotated) == a


def test_type1_board_is_nest_a():
    assert h4_canonicalize(Board.from_text(TYPE1_TEXT)).text == H4_REPRESENTATIVES["a"]
    assert TYPE1_TEXT == H4_REPRESENTATIVES["a"]


def test_h4_canonicalize_agrees_with_orbit_scan_on_all_boards():
    # constructive path vs the definitional unique-orbit-member path
    for b in enumerate_all():
        assert h4_canonicalize(b) == h4_orbit_canonical(b)


def test_h4_canonicalize_transform_is_a_position_symmetry_that_works():
    h4 = generate_position([gen_r(), gen_s(), gen_t()])
    for b in enumerate_all():
        canon, transform = h4_canonicalize_with_transform(b)
        assert SymmetryElement.from_position(transform) in h4
        assert Board(position_apply(transform, b.values)) == canon


def test_h4_nests_golden():
    nests = h4_nests()
    assert {n.label: n.size for n in nests} == {
        "a": 32, "b": 64, "c": 32, "d": 64, "e": 64, "f": 32,
    }
    assert {n.label: n.representative.text for n in nests} == H4_REPRESENTATIVES
    # labels follow lexicographic order of the representatives
    reps = [n.representative for n in nests]
    assert reps == sorted(reps)


def test_h4_nests_match_position_orbits():
    partition = nest_partition(h4_nests())
    h4 = generate_position([gen_r(), gen_s(), gen_t()])
    assert {frozenset(b) for b in orbits(h4).blocks} == partition
    r2st = generate_position([gen_r2(), gen_s(), gen_t()])
    assert {frozenset(b) for b in orbits(r2st).blocks} == partition


def test_h4_nest_graph_known_edges():
    graph = h4_nest_graph([relabeling("(3 4)"), relabeling("(2 3)")])
    moves = {(e.label, e.src): (e.dst, e.aux) for e in graph.edges}
    dst, aux = moves[("(3 4)", "a")]
    assert dst == "c" and aux is None
    dst, aux = moves[("(2 3)", "a")]
    assert dst == "a" and aux == gen_t()


def test_h4_nest_graph_components():
    full = h4_nest_graph([relabeling(n) for n in ("(1 2)", "(2 3)", "(3 4)", "(1 4)")])
    assert {frozenset(c) for c in full.components()} == {
        frozenset("acf"),
        frozenset("bde"),
    }
    assert h4_nest_graph([relabeling("(1 2)"), relabeling("(2 3)")]).component_count == 2
    assert h4_nest_graph(()).component_count == 6


def test_h4_nest_graph_three_cycle():
    graph = h4_nest_graph([relabeling("(1 2 3)")])
    assert graph.component_count == 2
    moves = {e.src: e.dst for e in graph.edges}
    assert moves == {"a": "c", "c": "f", "f": "a", "b": "e", "e": "d", "d": "b"}
    assert all(e.directed for e in graph.edges)


def test_h4_nest_graph_well_defined_on_all_members():
    for name in ("(1 2)", "(1 2 3)"):
        sigma = relabeling(name)
        graph = h4_nest_graph([(name, sigma)])
        targets = {e.src: e.dst for e in graph.edges}
        index = {n.representative: n.label for n in h4_nests()}
        for nest in graph.nests:
            for member in nest.members:
                moved = apply(SymmetryElement.from_relabeling(sigma), member)
                assert index[h4_canonicalize(moved)] == targets[nest.label]


def test_completeness_via_nests():
    assert completeness_via_nests([gen_s(), gen_t()]) is True
    assert completeness_via_nests([gen_r(), gen_t()]) is False
    assert completeness_via_nests([relabeling("(1 2 3)")]) is True
    assert completeness_via_nests([relabeling("(1 2)"), relabeling("(2 3)")]) is True
    assert completeness_via_nests([]) is False


def test_completeness_component_unions_match_type_split():
    graph = s4_nest_graph([gen_s(), gen_t()])
    unions = {
        frozenset(b for label in comp for b in graph.nest(label).members)
        for comp in graph.components()
    }
    assert unions == {frozenset(block) for block in full_partition().blocks}


def test_nest_graph_rejects_mixed_or_wrong_degree():
    with pytest.raises(ValueError):
        completeness_via_nests([gen_s(), relabeling("(1 2)")])
    with pytest.raises(ValueError):
        s4_nest_graph([relabeling("(1 2)")])
    with pytest.raises(ValueError):
        h4_nest_graph([gen_s()])


def test_nest_lookup_helpers():
    assert s4_nest_of(Board.from_text(TYPE1_TEXT)) == "B"
    assert h4_nest_of(Board.from_text(TYPE1_TEXT)) == "a"
    assert h4_nest_of(Board.from_text(TYPE2_TEXT)) == "d"  # one of the size-64 nests
    graph = s4_nest_graph(())
    with pytest.raises(KeyError):
        graph.nest("Z")
