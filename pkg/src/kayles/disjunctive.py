"""Disjunctive compound (long rule): Grundy values, outcomes and winning moves.

Normal play is fully solved through the 0.137 Grundy sequence (period 34
after a preperiod of 51).  Misere play is unsolved in closed form; outcomes
are delegated to the exhaustive oracle at small size.
"""

from functools import reduce

from .core import (
    CompoundMove,
    Ending,
    MoveRule,
    Play,
    Position,
    Variant,
    apply_move,
)
from .errors import BoundExceeded, NotWinnable
from .octal import (
    DAWSON,
    PeriodDescriptor,
    PeriodicSequence,
    ValueSequence,
    guy_smith_check,
    octal_grundy,
)

# Periodicity holds from index 52 on: the value at 51 is the last irregular
# one, so the check below certifies the tail with preperiod parameter 51.
RHO_PERIOD = PeriodDescriptor(preperiod=52, period=34)

_COMPUTE_TO = 2 * RHO_PERIOD.preperiod + 2 * RHO_PERIOD.period + 10

_rho_ext: PeriodicSequence | None = None


def rho_sequence(n_max: int = _COMPUTE_TO) -> ValueSequence:
    return octal_grundy(DAWSON, n_max, kind="rho")


def _certified() -> PeriodicSequence:
    global _rho_ext
    if _rho_ext is None:
        seq = rho_sequence()
        if not guy_smith_check(seq, RHO_PERIOD.period, RHO_PERIOD.preperiod - 1):
            raise AssertionError("0.137 periodicity certification failed")
        _rho_ext = PeriodicSequence(seq, RHO_PERIOD)
    return _rho_ext


def rho(n: int) -> int:
    """Grundy number of the n-path, via certified periodic extension."""
    return int(_certified().value_at(n))


def rho_xor(p: Position) -> int:
    return reduce(lambda a, b: a ^ b, (rho(n) for n in p), 0)


def disj_normal_outcome(p: Position) -> str:
    """'P' or 'N' for the disjunctive compound under normal play."""
    return "P" if rho_xor(p) == 0 else "N"


def disj_normal_best_move(p: Position) -> CompoundMove:
    """First move (component order, then vertex order) whose successor XORs to 0."""
    total = rho_xor(p)
    if total == 0:
        raise NotWinnable(f"position {p} is a P-position")
    for idx, n in enumerate(p):
        for v in range(1, n + 1):
            move = CompoundMove(((idx, v),))
            if rho_xor(apply_move(p, move).successor) == 0:
                return move
    raise AssertionError(f"no winning move found from N-position {p}")


def disj_misere_outcome(p: Position, bound: int = 16) -> str:
    """Exact misere outcome by exhaustive search; only feasible at small size."""
    from .oracle import Oracle

    if sum(p) > bound:
        raise BoundExceeded(
            f"misere disjunctive is oracle-only; total {sum(p)} exceeds bound {bound}"
        )
    variant = Variant(MoveRule.DISJUNCTIVE, Ending.LONG, Play.MISERE)
    return Oracle(bound=bound).outcome(p, variant)
