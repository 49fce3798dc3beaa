import pytest

from kayles.core import CompoundMove, MoveRule, variant_by_name
from kayles.disjunctive import rho_xor
from kayles.engine import (
    ORACLE_BOUND_ENV,
    GameState,
    IllegalMove,
    configured_oracle_bound,
    engine_move,
    first_legal_move,
    validate_move,
)
from kayles.errors import KaylesError


def mv(*choices):
    return CompoundMove(tuple(choices))


def test_validate_move_arity():
    p = (5, 3)
    validate_move(p, mv((0, 2)), MoveRule.DISJUNCTIVE)
    with pytest.raises(IllegalMove):
        validate_move(p, mv((0, 2), (1, 1)), MoveRule.DISJUNCTIVE)
    validate_move(p, mv((0, 2), (1, 1)), MoveRule.CONJUNCTIVE)
    with pytest.raises(IllegalMove):
        validate_move(p, mv((0, 2)), MoveRule.CONJUNCTIVE)
    validate_move(p, mv((1, 3)), MoveRule.SELECTIVE)
    validate_move(p, mv((0, 1), (1, 2)), MoveRule.SELECTIVE)
    with pytest.raises(IllegalMove):
        validate_move(p, CompoundMove(()), MoveRule.SELECTIVE)


def test_validate_move_ranges():
    p = (4,)
    with pytest.raises(IllegalMove):
        validate_move(p, mv((1, 1)), MoveRule.DISJUNCTIVE)
    with pytest.raises(IllegalMove):
        validate_move(p, mv((0, 5)), MoveRule.DISJUNCTIVE)
    with pytest.raises(IllegalMove):
        validate_move(p, mv((0, 0)), MoveRule.DISJUNCTIVE)
    with pytest.raises(IllegalMove):
        validate_move((), mv((0, 1)), MoveRule.DISJUNCTIVE)
    with pytest.raises(IllegalMove):
        validate_move((3, 3), mv((0, 1), (0, 2)), MoveRule.SELECTIVE)


def test_long_normal_game_ends_on_empty():
    g = GameState(variant_by_name("disj-normal"), (1, 1))
    g.step(mv((0, 1)))
    assert g.status == "ongoing" and g.to_move == "second"
    g.step(mv((0, 1)))
    assert g.status == "finished"
    assert g.winner == "second"  # last mover wins under normal play


def test_long_misere_game_last_mover_loses():
    g = GameState(variant_by_name("disj-misere"), (1,))
    g.step(mv((0, 1)))
    assert g.status == "finished"
    assert g.winner == "second"


def test_short_normal_game_ends_on_first_emptied_component():
    g = GameState(variant_by_name("ddc-normal"), (3, 5))
    g.step(mv((0, 2)))  # empties the 3-path
    assert g.status == "finished"
    assert g.winner == "first"


def test_short_misere_emptier_loses():
    g = GameState(variant_by_name("ssc-misere"), (2, 5))
    g.step(mv((0, 1)))  # empties the 2-path; mover loses
    assert g.status == "finished"
    assert g.winner == "second"


def test_short_game_continues_without_emptying():
    g = GameState(variant_by_name("ssc-normal"), (5, 5))
    g.step(mv((0, 3)))
    assert g.status == "ongoing"
    assert g.position == (5, 1, 1)


def test_step_refuses_finished_game():
    g = GameState(variant_by_name("disj-normal"), (1,))
    g.step(mv((0, 1)))
    with pytest.raises(IllegalMove):
        g.step(mv((0, 1)))


def test_history_records_movers():
    g = GameState(variant_by_name("disj-normal"), (2, 2))
    g.step(mv((0, 1)))
    g.step(mv((0, 1)))
    assert [side for side, _ in g.history] == ["first", "second"]


def test_first_legal_move_is_deterministic():
    assert first_legal_move((3, 2), MoveRule.DISJUNCTIVE) == mv((0, 1))
    assert first_legal_move((3, 2), MoveRule.CONJUNCTIVE) == mv((0, 1), (1, 1))


def test_engine_move_wins_when_possible():
    v = variant_by_name("disj-normal")
    move = engine_move((4, 3), v)
    from kayles.core import apply_move

    assert rho_xor(apply_move((4, 3), move).successor) == 0


def test_engine_move_falls_back_on_losing_positions():
    v = variant_by_name("disj-normal")
    assert engine_move((4,), v) == first_legal_move((4,), MoveRule.DISJUNCTIVE)


def test_engine_move_oracle_variant(monkeypatch):
    v = variant_by_name("disj-misere")
    move = engine_move((1, 1), v)
    from kayles.core import apply_move
    from kayles.oracle import Oracle

    succ = apply_move((1, 1), move).successor
    assert Oracle(bound=8).outcome(succ, v) == "P"
    # over the bound the engine still answers with the fallback
    monkeypatch.setenv(ORACLE_BOUND_ENV, "4")
    assert engine_move((10, 10), v) == first_legal_move((10, 10), MoveRule.DISJUNCTIVE)


def test_configured_oracle_bound(monkeypatch):
    monkeypatch.delenv(ORACLE_BOUND_ENV, raising=False)
    assert configured_oracle_bound() == 16
    monkeypatch.setenv(ORACLE_BOUND_ENV, "22")
    assert configured_oracle_bound() == 22
    monkeypatch.setenv(ORACLE_BOUND_ENV, "lots")
    with pytest.raises(KaylesError):
        configured_oracle_bound()
