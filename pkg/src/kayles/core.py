"""Positions, move generation and compound-move semantics for Node-Kayles on paths.

A position is a canonical multiset of path lengths: a tuple of positive
integers sorted in descending order.  Deleting vertex v of an n-path removes
v together with its neighbours, leaving two residual paths that become
independent top-level components.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from .errors import InvalidLength, InvalidVertex, NoMoves

Position = tuple[int, ...]

EMPTY: Position = ()


class MoveRule(Enum):
    DISJUNCTIVE = "disjunctive"
    CONJUNCTIVE = "conjunctive"
    SELECTIVE = "selective"


class Ending(Enum):
    LONG = "long"
    SHORT = "short"


class Play(Enum):
    NORMAL = "normal"
    MISERE = "misere"


@dataclass(frozen=True)
class Variant:
    """One of Conway's twelve compound conventions."""

    move_rule: MoveRule
    ending: Ending
    play: Play

    @property
    def name(self) -> str:
        return _VARIANT_NAMES[(self.move_rule, self.ending)] + "-" + self.play.value


_VARIANT_NAMES = {
    (MoveRule.DISJUNCTIVE, Ending.LONG): "disj",
    (MoveRule.DISJUNCTIVE, Ending.SHORT): "ddc",
    (MoveRule.CONJUNCTIVE, Ending.SHORT): "conj",
    (MoveRule.CONJUNCTIVE, Ending.LONG): "ccc",
    (MoveRule.SELECTIVE, Ending.LONG): "sel",
    (MoveRule.SELECTIVE, Ending.SHORT): "ssc",
}

VARIANTS: dict[str, Variant] = {
    v.name: v
    for v in (
        Variant(mr, e, p)
        for (mr, e) in _VARIANT_NAMES
        for p in (Play.NORMAL, Play.MISERE)
    )
}


def variant_by_name(name: str) -> Variant:
    try:
        return VARIANTS[name]
    except KeyError:
        raise KeyError(
            f"unknown variant {name!r}; expected one of {sorted(VARIANTS)}"
        ) from None


@dataclass(frozen=True)
class CompoundMove:
    """Vertex selections keyed by component index into the canonical part list."""

    choices: tuple[tuple[int, int], ...]  # (component index, vertex), sorted

    def as_dict(self) -> dict[int, int]:
        return dict(self.choices)


@dataclass(frozen=True)
class Transition:
    successor: Position
    emptied_components: int


def canonicalize(lengths: Iterable[int]) -> Position:
    """Drop zero-length paths and sort the rest in descending order."""
    parts = []
    for n in lengths:
        if n < 0:
            raise InvalidLength(f"negative path length {n}")
        if n > 0:
            parts.append(n)
    return tuple(sorted(parts, reverse=True))


def parse_position(text: str) -> Position:
    """Parse the comma-separated text form; '-' or '' is the empty position."""
    text = text.strip()
    if text in ("", "-"):
        return EMPTY
    try:
        lengths = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise InvalidLength(f"cannot parse position {text!r}") from None
    if any(n <= 0 for n in lengths):
        raise InvalidLength(f"position parts must be positive: {text!r}")
    return canonicalize(lengths)


def format_position(p: Position) -> str:
    return ",".join(str(n) for n in p) if p else "-"


def vertex_result(n: int, v: int) -> tuple[int, int]:
    """Residual (left, right) path lengths after deleting N+(v) from an n-path."""
    if not 1 <= v <= n:
        raise InvalidVertex(f"vertex {v} out of range for path of {n} vertices")
    return (max(v - 2, 0), max(n - v - 1, 0))


@lru_cache(maxsize=None)
def path_options(n: int) -> frozenset[Position]:
    """Deduplicated canonical successors of a lone n-path."""
    if n < 0:
        raise InvalidLength(f"negative path length {n}")
    return frozenset(
        canonicalize(vertex_result(n, v)) for v in range(1, n + 1)
    )


def apply_move(p: Position, move: CompoundMove) -> Transition:
    """Apply per-component vertex choices; counts components reduced to nothing."""
    chosen = move.as_dict()
    parts: list[int] = []
    emptied = 0
    for idx, n in enumerate(p):
        if idx in chosen:
            left, right = vertex_result(n, chosen[idx])
            if left == 0 and right == 0:
                emptied += 1
            parts.extend((left, right))
        else:
            parts.append(n)
    return Transition(canonicalize(parts), emptied)


def compound_moves(
    p: Position, rule: MoveRule
) -> list[tuple[CompoundMove, Transition]]:
    """Every legal compound move from p with its transition.

    Equal-result moves are kept distinct (moves are reported by vertex, so a
    UI can highlight the chosen vertices).
    """
    if not p:
        raise NoMoves("no moves from the empty position")
    moves: list[CompoundMove] = []
    k = len(p)
    if rule is MoveRule.DISJUNCTIVE:
        for idx, n in enumerate(p):
            for v in range(1, n + 1):
                moves.append(CompoundMove(((idx, v),)))
    elif rule is MoveRule.CONJUNCTIVE:
        for vs in product(*(range(1, n + 1) for n in p)):
            moves.append(CompoundMove(tuple(enumerate(vs))))
    else:  # SELECTIVE: nonempty subsets of components, one vertex in each
        for mask in range(1, 1 << k):
            idxs = [i for i in range(k) if mask & (1 << i)]
            for vs in product(*(range(1, p[i] + 1) for i in idxs)):
                moves.append(CompoundMove(tuple(zip(idxs, vs))))
    return [(m, apply_move(p, m)) for m in moves]


def cycle_option(n: int) -> Position:
    """The unique option of the n-cycle: a path on n-3 vertices."""
    if n < 3:
        raise InvalidLength(f"cycle needs at least 3 vertices, got {n}")
    return canonicalize([n - 3])


def positions_of_total(total: int) -> Iterator[Position]:
    """All canonical positions whose parts sum to exactly `total`."""
    def partitions(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in partitions(remaining - first, first):
                yield (first,) + rest

    yield from partitions(total, total)
