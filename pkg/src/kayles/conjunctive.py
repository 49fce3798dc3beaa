"""Conjunctive compound (short rule): remoteness values, outcomes, strategy.

Remoteness of a union of paths is the minimum over its components; the
closed forms are tiny (normal: 1,1,1,2,2,3,3,3,4,4 then 3 forever; misere:
1,1 then 2 forever), so outcomes are constant-time per component.
"""

from functools import lru_cache

from .core import CompoundMove, Play, Position, path_options
from .errors import NotWinnable


def remoteness(n: int, play: Play) -> int:
    """Closed-form remoteness of the n-path."""
    if n == 0:
        return 0
    if play is Play.NORMAL:
        if n <= 3:
            return 1
        if n in (4, 5):
            return 2
        if n in (9, 10):
            return 4
        return 3
    return 1 if n <= 2 else 2


@lru_cache(maxsize=None)
def remoteness_by_recursion(n: int, play: Play) -> int:
    """Independent route: the defining recursion over path options.

    The winner hurries: one more than the minimal even option remoteness if
    any option is even, else one more than the maximal odd one.  Misere play
    swaps the parities.  A union's remoteness is the minimum over its parts.
    """
    if n == 0:
        return 0
    opts = [
        min((remoteness_by_recursion(part, play) for part in opt), default=0)
        for opt in path_options(n)
    ]
    good_parity = 0 if play is Play.NORMAL else 1
    good = [r for r in opts if r % 2 == good_parity]
    if good:
        return 1 + min(good)
    return 1 + max(r for r in opts if r % 2 != good_parity)


def compound_remoteness(p: Position, play: Play) -> int:
    return min((remoteness(n, play) for n in p), default=0)


def conj_outcome(p: Position, play: Play) -> str:
    r = compound_remoteness(p, play)
    if play is Play.NORMAL:
        return "P" if r % 2 == 0 else "N"
    return "P" if r % 2 == 1 else "N"


def _normal_vertex(n: int) -> int:
    """Vertex choice for one component of a winning normal-play move."""
    if n <= 2:
        return 1        # empties the component, ending the game in our favor
    if n == 3:
        return 2        # middle vertex clears the path
    if n in (6, 7, 9, 10):
        return 1        # leave a single path of n-2 vertices
    if n == 8:
        return 2        # leave a 5-path
    return 6            # split off a 4-path, leaving n-7 alongside it


def conj_best_move(p: Position, play: Play) -> CompoundMove:
    """A full conjunctive move (one vertex per component) to a P-position.

    Normal play: end a short component outright when one exists, otherwise
    steer every component to remoteness-2 or remoteness-3 paths with at
    least one 4/5-path present.  Misere play: leave an isolated vertex in
    every component so the opponent is forced to end the game.
    """
    if conj_outcome(p, play) == "P":
        raise NotWinnable(f"position {p} is a P-position")
    if play is Play.NORMAL:
        if p[-1] <= 3:
            # game ends on this move; choices elsewhere are irrelevant
            choices = tuple(
                (i, _normal_vertex(n) if n <= 3 else 1) for i, n in enumerate(p)
            )
        else:
            choices = tuple((i, _normal_vertex(n)) for i, n in enumerate(p))
    else:
        # every component has at least 3 vertices here (else the position
        # would already be a misere P-position); leave a 1-path in each
        choices = tuple((i, 3) for i, n in enumerate(p))
    return CompoundMove(choices)
