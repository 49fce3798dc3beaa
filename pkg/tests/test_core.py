import pytest

from kayles.core import (
    CompoundMove,
    EMPTY,
    MoveRule,
    VARIANTS,
    apply_move,
    canonicalize,
    compound_moves,
    cycle_option,
    format_position,
    parse_position,
    path_options,
    positions_of_total,
    variant_by_name,
    vertex_result,
)
from kayles.errors import InvalidLength, InvalidVertex, NoMoves


def test_canonicalize_sorts_and_drops_zeros():
    assert canonicalize([3, 0, 5, 1, 0]) == (5, 3, 1)
    assert canonicalize([]) == EMPTY
    with pytest.raises(InvalidLength):
        canonicalize([2, -1])


def test_parse_and_format_roundtrip():
    assert parse_position("5,3,1") == (5, 3, 1)
    assert parse_position("1,5,3") == (5, 3, 1)
    assert parse_position("-") == EMPTY
    assert parse_position("") == EMPTY
    assert format_position((5, 3, 1)) == "5,3,1"
    assert format_position(EMPTY) == "-"
    with pytest.raises(InvalidLength):
        parse_position("3,0")
    with pytest.raises(InvalidLength):
        parse_position("a,b")


def test_vertex_result_end_middle():
    assert vertex_result(5, 1) == (0, 3)
    assert vertex_result(5, 3) == (1, 1)
    assert vertex_result(5, 5) == (3, 0)
    assert vertex_result(1, 1) == (0, 0)
    with pytest.raises(InvalidVertex):
        vertex_result(4, 5)
    with pytest.raises(InvalidVertex):
        vertex_result(4, 0)


def test_path_options_small():
    assert path_options(0) == frozenset()
    assert path_options(1) == {()}
    assert path_options(3) == {(), (1,)}
    assert path_options(6) == {(4,), (3,), (2, 1)}


def test_path_options_matches_general_rule():
    # successors of a lone path: drop 2, drop 3, or split i + j = n - 3
    for n in range(4, 40):
        expected = {(n - 2,), canonicalize([n - 3])}
        for i in range(1, (n - 3) // 2 + 1):
            expected.add(canonicalize([i, n - 3 - i]))
        assert path_options(n) == expected


def test_apply_move_counts_emptied():
    tr = apply_move((3, 1), CompoundMove(((0, 2), (1, 1))))
    assert tr.successor == EMPTY
    assert tr.emptied_components == 2
    tr = apply_move((5, 2), CompoundMove(((0, 3),)))
    assert tr.successor == (2, 1, 1)
    assert tr.emptied_components == 0


def test_compound_move_counts_by_rule():
    p = (3, 2)
    assert len(compound_moves(p, MoveRule.DISJUNCTIVE)) == 5
    assert len(compound_moves(p, MoveRule.CONJUNCTIVE)) == 6
    # selective: all nonempty subsets: 3 + 2 + 6
    assert len(compound_moves(p, MoveRule.SELECTIVE)) == 11
    with pytest.raises(NoMoves):
        compound_moves(EMPTY, MoveRule.DISJUNCTIVE)


def test_variant_names():
    assert len(VARIANTS) == 12
    assert variant_by_name("disj-normal").move_rule is MoveRule.DISJUNCTIVE
    assert variant_by_name("ssc-misere").name == "ssc-misere"
    with pytest.raises(KeyError):
        variant_by_name("nonsense")


def test_cycle_option():
    assert cycle_option(3) == EMPTY
    assert cycle_option(10) == (7,)
    with pytest.raises(InvalidLength):
        cycle_option(2)


def test_positions_of_total_are_partitions():
    got = list(positions_of_total(5))
    assert len(got) == len(set(got)) == 7
    assert all(sum(p) == 5 for p in got)
    assert all(p == tuple(sorted(p, reverse=True)) for p in got)
