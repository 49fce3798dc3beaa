"""Diminished disjunctive compound (short rule): foreclosed values F+ / F-.

F+ (normal play) is Star on paths of at most 3 vertices and periodic with
period 84 after a preperiod of 245.  F- (misere play) shows no period on any
computed range; it coincides with the 0.13337 Grundy sequence shifted by two.
"""

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .core import CompoundMove, Play, Position, apply_move, compound_moves, MoveRule
from .errors import InsufficientData, NotWinnable
from .octal import (
    MISERE_FORECLOSED_CODE,
    PeriodDescriptor,
    PeriodicSequence,
    STAR,
    GameValue,
    ValueSequence,
    guy_smith_check,
    octal_grundy,
    _mex_of,
    _STAR_CODE,
)

FPLUS_PERIOD = PeriodDescriptor(preperiod=245, period=84)

_FPLUS_COMPUTE_TO = 2 * FPLUS_PERIOD.preperiod + 2 * FPLUS_PERIOD.period + 12


def fplus_sequence(n_max: int) -> ValueSequence:
    """F+ for paths 0..n_max by direct mex recursion (star absorbs in unions)."""
    g = np.full(n_max + 1, _STAR_CODE, dtype=np.int64)
    for n in range(4, n_max + 1):
        opts = [g[n - 2 : n - 1], g[n - 3 : n - 2]]
        # splits with either half at most 3 vertices carry Star and drop out
        m = (n - 3) // 2
        if m >= 4:
            left = g[4 : m + 1]
            right = g[n - 7 : n - 4 - m : -1]
            opts.append(left ^ right)
        g[n] = _mex_of(np.concatenate(opts))
    return ValueSequence(g, kind="fplus")


_fplus_ext: PeriodicSequence | None = None


def _fplus_certified() -> PeriodicSequence:
    global _fplus_ext
    if _fplus_ext is None:
        seq = fplus_sequence(_FPLUS_COMPUTE_TO)
        if not guy_smith_check(seq, FPLUS_PERIOD.period, FPLUS_PERIOD.preperiod):
            raise AssertionError("F+ periodicity certification failed")
        _fplus_ext = PeriodicSequence(seq, FPLUS_PERIOD)
    return _fplus_ext


def fplus(n: int) -> GameValue:
    """F+ of the n-path; Star for n <= 3, periodic extension beyond the table."""
    return _fplus_certified().value_at(n)


class _FMinusCache:
    """Incrementally grown F- values; index 0 is Star, everything else an int."""

    def __init__(self):
        self.values = np.array([_STAR_CODE, 0, 0, 1, 1], dtype=np.int64)

    def ensure(self, limit: int) -> np.ndarray:
        g = self.values
        if limit < len(g):
            return g
        g = np.concatenate([g, np.zeros(limit + 1 - len(g), dtype=np.int64)])
        for n in range(len(self.values), limit + 1):
            m = (n - 3) // 2
            left = g[1 : m + 1]
            right = g[n - 4 : n - 4 - m : -1]
            opts = np.concatenate([g[n - 2 : n - 1], g[n - 3 : n - 2], left ^ right])
            g[n] = _mex_of(opts)
        self.values = g
        return g


_fminus_cache = _FMinusCache()


def fminus_sequence(limit: int) -> ValueSequence:
    return ValueSequence(_fminus_cache.ensure(limit)[: limit + 1], kind="fminus")


def fminus(n: int, limit: int | None = None) -> GameValue:
    """F- of the n-path, computed incrementally up to `limit` (default: n)."""
    if limit is None:
        limit = n
    if n > limit:
        raise InsufficientData(f"F- requested at {n} beyond limit {limit}")
    return fminus_sequence(limit)[n]


def _fminus_xor(p: Position) -> int:
    g = _fminus_cache.ensure(max(p))
    return int(reduce(lambda a, b: a ^ b, (int(g[n]) for n in p), 0))


def _fplus_xor_defined(p: Position) -> int:
    """XOR of F+ over parts, all of which must be at least 4 vertices."""
    acc = 0
    for n in p:
        v = fplus(n)
        assert v is not STAR
        acc ^= int(v)
    return acc


def ddc_outcome(p: Position, play: Play) -> str:
    if play is Play.NORMAL:
        if not p:
            return "P"
        if p[-1] <= 3:  # mover ends that component and wins under the short rule
            return "N"
        return "P" if _fplus_xor_defined(p) == 0 else "N"
    if not p:
        return "N"
    return "P" if _fminus_xor(p) == 0 else "N"


def ddc_best_move(p: Position, play: Play) -> CompoundMove:
    """First disjunctive move that wins outright or leaves a P-position."""
    if ddc_outcome(p, play) == "P":
        raise NotWinnable(f"position {p} is a P-position")
    for move, tr in compound_moves(p, MoveRule.DISJUNCTIVE):
        if play is Play.NORMAL:
            if tr.emptied_components >= 1:
                return move
            if ddc_outcome(tr.successor, play) == "P":
                return move
        else:
            # ending any component loses under misere; the game must go on
            if tr.emptied_components == 0 and ddc_outcome(tr.successor, play) == "P":
                return move
    raise AssertionError(f"no winning move found from N-position {p}")


@dataclass(frozen=True)
class StatsRow:
    n: int
    nbz: int
    max: int
    mean: float
    deviation: float
    freqv: int
    pct_freqv: float
    maxz: int
    posmax: int

    CSV_HEADER = "n,NbZ,Max,Mean,Deviation,FreqV,PctFreqV,MaxZ,PosMax"

    def to_csv_row(self) -> str:
        return (
            f"{self.n},{self.nbz},{self.max},{self.mean:g},{self.deviation:g},"
            f"{self.freqv},{self.pct_freqv:g},{self.maxz},{self.posmax}"
        )


def fminus_stats(n: int) -> StatsRow:
    """Descriptive statistics of F- over the interval [1, n].

    Mean is the arithmetic mean; Deviation is the mean absolute deviation
    from it (the convention that yields 1.08 at n = 10).  Ties:
    most frequent value -> smallest value; index of the maximum -> smallest
    index attaining it.
    """
    g = _fminus_cache.ensure(n)
    vals = g[1 : n + 1]
    zeros = np.flatnonzero(vals == 0) + 1
    vmax = int(vals.max())
    counts = np.bincount(vals)
    freqv = int(np.argmax(counts))
    mean = float(vals.mean())
    return StatsRow(
        n=n,
        nbz=int(zeros.size),
        max=vmax,
        mean=mean,
        deviation=float(np.abs(vals - mean).mean()),
        freqv=freqv,
        pct_freqv=100.0 * int(counts[freqv]) / n,
        maxz=int(zeros[-1]) if zeros.size else 0,
        posmax=int(np.flatnonzero(vals == vmax)[0]) + 1,
    )


def fminus_octal_check(n_max: int) -> bool:
    """F-(P_n) == 0.13337 Grundy of a heap of n-2, for all 2 <= n <= n_max."""
    g = _fminus_cache.ensure(n_max)
    heap = octal_grundy(MISERE_FORECLOSED_CODE, n_max - 2).raw
    return bool(np.array_equal(g[2 : n_max + 1], heap[: n_max - 1]))
