"""Exhaustive memoized ground truth for every variant at small sizes.

The oracle expands raw game trees with no algebraic shortcuts whatsoever;
every fast solver in the package is certified against it by the audit
module.  Exactness over speed: positions are capped by total vertex count,
and selective move generation is additionally capped by component count.
"""

from .core import (
    CompoundMove,
    Ending,
    MoveRule,
    Play,
    Position,
    Variant,
    compound_moves,
)
from .errors import BoundExceeded, NotWinnable

DEFAULT_BOUND = 16
SELECTIVE_COMPONENT_CAP = 10


class Oracle:
    """Game-tree evaluator memoized per variant (and per play for the
    remoteness/suspense recursions)."""

    def __init__(self, bound: int = DEFAULT_BOUND,
                 selective_cap: int = SELECTIVE_COMPONENT_CAP):
        self.bound = bound
        self.selective_cap = selective_cap
        self._outcome: dict[Variant, dict[Position, str]] = {}
        self._remoteness: dict[Play, dict[Position, int]] = {}
        self._suspense: dict[Play, dict[Position, int]] = {}

    def _check(self, p: Position, rule: MoveRule) -> None:
        if sum(p) > self.bound:
            raise BoundExceeded(
                f"position {p} exceeds oracle bound {self.bound}"
            )
        if rule is MoveRule.SELECTIVE and len(p) > self.selective_cap:
            raise BoundExceeded(
                f"{len(p)} components exceed the selective cap {self.selective_cap}"
            )

    # -- outcome ----------------------------------------------------------

    def outcome(self, p: Position, variant: Variant) -> str:
        self._check(p, variant.move_rule)
        memo = self._outcome.setdefault(variant, {})
        return self._outcome_rec(p, variant, memo)

    def _outcome_rec(self, p, variant, memo) -> str:
        if not p:
            # long-rule terminal: the previous player made the last move
            return "P" if variant.play is Play.NORMAL else "N"
        cached = memo.get(p)
        if cached is not None:
            return cached
        memo[p] = "?"  # cycle guard; positions strictly shrink, so unused
        result = "P"
        for _, tr in compound_moves(p, variant.move_rule):
            if variant.ending is Ending.SHORT and tr.emptied_components >= 1:
                # the game ends on this move
                if variant.play is Play.NORMAL:
                    result = "N"
                    break
                continue  # misere: making the ending move loses
            if self._outcome_rec(tr.successor, variant, memo) == "P":
                result = "N"
                break
        memo[p] = result
        return result

    def best_moves(self, p: Position, variant: Variant) -> list[CompoundMove]:
        """All moves that win outright or leave an oracle-P successor."""
        self._check(p, variant.move_rule)
        if self.outcome(p, variant) == "P":
            raise NotWinnable(f"position {p} is a P-position under {variant.name}")
        memo = self._outcome[variant]
        winners = []
        for move, tr in compound_moves(p, variant.move_rule):
            if variant.ending is Ending.SHORT and tr.emptied_components >= 1:
                if variant.play is Play.NORMAL:
                    winners.append(move)
                continue
            if self._outcome_rec(tr.successor, variant, memo) == "P":
                winners.append(move)
        return winners

    # -- remoteness (conjunctive, short rule) -----------------------------

    def remoteness(self, p: Position, play: Play) -> int:
        if sum(p) > self.bound:
            raise BoundExceeded(f"position {p} exceeds oracle bound {self.bound}")
        memo = self._remoteness.setdefault(play, {})
        return self._rs_rec(p, play, memo, suspense=False)

    # -- suspense (conjunctive, long rule) --------------------------------

    def suspense(self, p: Position, play: Play) -> int:
        if sum(p) > self.bound:
            raise BoundExceeded(f"position {p} exceeds oracle bound {self.bound}")
        memo = self._suspense.setdefault(play, {})
        return self._rs_rec(p, play, memo, suspense=True)

    def _rs_rec(self, p, play, memo, suspense: bool) -> int:
        """Shared remoteness/suspense recursion over full conjunctive moves.

        Remoteness: a move emptying a component ends the game (short rule),
        contributing an option of remoteness 0.  Suspense: emptied components
        simply drop out and play continues in the rest (long rule).
        """
        if not p:
            return 0
        cached = memo.get(p)
        if cached is not None:
            return cached
        opts = set()
        for _, tr in compound_moves(p, MoveRule.CONJUNCTIVE):
            if not suspense and tr.emptied_components >= 1:
                opts.add(0)
            else:
                opts.add(self._rs_rec(tr.successor, play, memo, suspense))
        good_parity = 0 if play is Play.NORMAL else 1
        good = [r for r in opts if r % 2 == good_parity]
        if good:
            # winner in sight: hurry (remoteness) or linger (suspense)
            value = 1 + (max(good) if suspense else min(good))
        else:
            value = 1 + (min(opts) if suspense else max(opts))
        memo[p] = value
        return value
