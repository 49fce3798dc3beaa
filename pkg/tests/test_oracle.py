import pytest

from kayles.conjunctive import compound_remoteness, conj_outcome
from kayles.core import Play, apply_move, variant_by_name
from kayles.disjunctive import disj_normal_outcome
from kayles.errors import BoundExceeded, NotWinnable
from kayles.foreclosed import ddc_outcome
from kayles.oracle import DEFAULT_BOUND, SELECTIVE_COMPONENT_CAP, Oracle
from kayles.selective import sel_outcome
from kayles.suspense import ccc_outcome, compound_suspense


@pytest.fixture(scope="module")
def oracle():
    return Oracle(bound=12)


def test_reference_outcomes(oracle):
    assert oracle.outcome((1,), variant_by_name("disj-misere")) == "P"
    assert oracle.outcome((9,), variant_by_name("conj-normal")) == "P"
    assert oracle.outcome((1, 2), variant_by_name("sel-misere")) == "N"
    assert oracle.outcome((), variant_by_name("disj-normal")) == "P"
    assert oracle.outcome((), variant_by_name("disj-misere")) == "N"


def test_remoteness_examples(oracle):
    assert oracle.remoteness((4,), Play.NORMAL) == 2
    assert oracle.remoteness((1, 4), Play.NORMAL) == 1
    assert oracle.remoteness((), Play.NORMAL) == 0


def test_suspense_examples(oracle):
    assert oracle.suspense((5,), Play.NORMAL) == 2
    assert oracle.suspense((1, 1), Play.NORMAL) == 1


def _positions(total_max):
    from kayles.audit import enumerate_positions

    return list(enumerate_positions(total_max))


def test_matches_disjunctive_solver(oracle):
    v = variant_by_name("disj-normal")
    for p in _positions(10):
        assert oracle.outcome(p, v) == disj_normal_outcome(p)


def test_matches_foreclosed_solver(oracle):
    for name, play in (("ddc-normal", Play.NORMAL), ("ddc-misere", Play.MISERE)):
        v = variant_by_name(name)
        for p in _positions(10):
            assert oracle.outcome(p, v) == ddc_outcome(p, play)


def test_matches_conjunctive_solver(oracle):
    for name, play in (("conj-normal", Play.NORMAL), ("conj-misere", Play.MISERE)):
        v = variant_by_name(name)
        for p in _positions(10):
            assert oracle.outcome(p, v) == conj_outcome(p, play)
            if p:
                assert oracle.remoteness(p, play) == compound_remoteness(p, play)


def test_matches_suspense_solver(oracle):
    for name, play in (("ccc-normal", Play.NORMAL), ("ccc-misere", Play.MISERE)):
        v = variant_by_name(name)
        for p in _positions(10):
            assert oracle.outcome(p, v) == ccc_outcome(p, play)
            if p:
                assert oracle.suspense(p, play) == compound_suspense(p, play)


def test_matches_selective_solver_normal(oracle):
    for name in ("sel-normal", "ssc-normal"):
        v = variant_by_name(name)
        for p in _positions(10):
            assert oracle.outcome(p, v) == sel_outcome(p, v.play, v.ending)


def test_best_moves(oracle):
    v = variant_by_name("disj-normal")
    moves = oracle.best_moves((3,), v)
    # only the middle vertex empties the 3-path into a zero position
    assert [m.choices for m in moves] == [((0, 2),)]
    for m in moves:
        tr = apply_move((3,), m)
        assert oracle.outcome(tr.successor, v) == "P"
    with pytest.raises(NotWinnable):
        oracle.best_moves((4,), v)


def test_bound_enforcement():
    oracle = Oracle(bound=8)
    with pytest.raises(BoundExceeded):
        oracle.outcome((9,), variant_by_name("disj-normal"))
    with pytest.raises(BoundExceeded):
        oracle.remoteness((5, 5), Play.NORMAL)


def test_selective_component_cap():
    oracle = Oracle(bound=16, selective_cap=4)
    v = variant_by_name("sel-normal")
    with pytest.raises(BoundExceeded):
        oracle.outcome((1, 1, 1, 1, 1), v)
    # the cap only applies to selective move generation
    assert oracle.outcome((1, 1, 1, 1, 1), variant_by_name("disj-normal")) == "N"


def test_defaults():
    oracle = Oracle()
    assert oracle.bound == DEFAULT_BOUND == 16
    assert oracle.selective_cap == SELECTIVE_COMPONENT_CAP == 10


def test_memo_isolation():
    # two variants sharing a position must not cross-contaminate
    oracle = Oracle(bound=10)
    assert oracle.outcome((5,), variant_by_name("conj-misere")) == "N"
    assert oracle.outcome((5,), variant_by_name("ccc-misere")) == "N"
    assert oracle.outcome((1,), variant_by_name("ccc-misere")) == "P"
    assert oracle.outcome((1,), variant_by_name("conj-normal")) == "N"
