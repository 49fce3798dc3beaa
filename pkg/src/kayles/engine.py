"""Shared play engine: move legality, game state transitions, engine replies.

Used by the terminal `play` command and the HTTP service so both enforce
identical rules (arity per move rule, termination per ending rule, winner
per play convention).
"""

import os
from dataclasses import dataclass, field

from .core import (
    CompoundMove,
    Ending,
    MoveRule,
    Play,
    Position,
    Variant,
    apply_move,
    compound_moves,
)
from .errors import KaylesError, NotWinnable, Unsupported

ORACLE_BOUND_ENV = "KAYLES_ORACLE_BOUND"


def configured_oracle_bound(default: int = 16) -> int:
    raw = os.environ.get(ORACLE_BOUND_ENV)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise KaylesError(f"{ORACLE_BOUND_ENV} must be an integer, got {raw!r}")


class IllegalMove(KaylesError):
    pass


def validate_move(p: Position, move: CompoundMove, rule: MoveRule) -> None:
    """Raise IllegalMove unless the move satisfies the variant's arity rule
    and every vertex choice is in range."""
    if not p:
        raise IllegalMove("the game is over; no moves are possible")
    chosen = move.as_dict()
    if len(chosen) != len(move.choices):
        raise IllegalMove("a component may be chosen at most once")
    if not chosen:
        raise IllegalMove("a move must act on at least one component")
    for idx, v in chosen.items():
        if not 0 <= idx < len(p):
            raise IllegalMove(f"component index {idx} out of range")
        if not 1 <= v <= p[idx]:
            raise IllegalMove(
                f"vertex {v} out of range for component {idx} ({p[idx]} vertices)"
            )
    if rule is MoveRule.DISJUNCTIVE and len(chosen) != 1:
        raise IllegalMove("disjunctive play: move in exactly one component")
    if rule is MoveRule.CONJUNCTIVE and len(chosen) != len(p):
        raise IllegalMove("conjunctive play: move in every component")
    # selective: any nonempty subset, already guaranteed


@dataclass
class GameState:
    variant: Variant
    position: Position
    history: list[tuple[str, CompoundMove]] = field(default_factory=list)
    status: str = "ongoing"            # ongoing | finished
    winner: str | None = None          # mover label of the winner
    to_move: str = "first"
    engine_side: str = "second"

    def _other(self) -> str:
        return "second" if self.to_move == "first" else "first"

    def step(self, move: CompoundMove) -> None:
        """Apply a move for the player to move, updating status/winner."""
        if self.status != "ongoing":
            raise IllegalMove("the game is already finished")
        validate_move(self.position, move, self.variant.move_rule)
        tr = apply_move(self.position, move)
        mover = self.to_move
        self.history.append((mover, move))
        self.position = tr.successor
        ended = (
            tr.emptied_components >= 1
            if self.variant.ending is Ending.SHORT
            else not tr.successor
        )
        if ended:
            self.status = "finished"
            last_mover_wins = self.variant.play is Play.NORMAL
            self.winner = mover if last_mover_wins else self._other()
        else:
            self.to_move = self._other()


def first_legal_move(p: Position, rule: MoveRule) -> CompoundMove:
    """Deterministic non-strategic fallback: lexicographically first move."""
    return compound_moves(p, rule)[0][0]


def engine_move(p: Position, variant: Variant) -> CompoundMove:
    """The solver's winning move when one exists, else the first legal move.

    Disjunctive misere has no fast solver; the oracle decides it within the
    configured bound, and beyond the bound the engine plays the fallback.
    """
    from .audit import solver_best_move, solver_outcome
    from .errors import BoundExceeded
    from .oracle import Oracle

    try:
        if solver_outcome(p, variant) == "N":
            return solver_best_move(p, variant)
        return first_legal_move(p, variant.move_rule)
    except Unsupported:
        pass
    except NotWinnable:
        return first_legal_move(p, variant.move_rule)
    # oracle-only variant (disjunctive misere)
    oracle = Oracle(bound=configured_oracle_bound())
    try:
        if oracle.outcome(p, variant) == "N":
            return oracle.best_moves(p, variant)[0]
    except BoundExceeded:
        pass
    return first_legal_move(p, variant.move_rule)
