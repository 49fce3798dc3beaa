"""Octal-game value sequences: mex/Nim-sum algebra, Grundy DP and periodicity.

Game values are either plain non-negative ints or the distinguished ``STAR``
marking positions whose foreclosed value is undefined.  Sequences store star
as -1 internally so the DP can stay in a dense numpy vector.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Union

import numpy as np

from .errors import InsufficientData


class _Star:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "*"


STAR = _Star()
GameValue = Union[int, _Star]

_STAR_CODE = -1


class StarMode(Enum):
    ABSORB = "absorb"   # x + * = *    (undefined poisons the union)
    NEUTRAL = "neutral"  # x + * = x   (an ended component contributes nothing)


def is_star(v: GameValue) -> bool:
    return v is STAR


def mex(vals: Iterable[GameValue]) -> int:
    """Least non-negative integer absent from vals; STAR entries are ignored."""
    present = {v for v in vals if v is not STAR}
    m = 0
    while m in present:
        m += 1
    return m


def nim_sum(a: GameValue, b: GameValue, star_mode: StarMode = StarMode.ABSORB) -> GameValue:
    if a is STAR and b is STAR:
        return STAR
    if a is STAR:
        return STAR if star_mode is StarMode.ABSORB else b
    if b is STAR:
        return STAR if star_mode is StarMode.ABSORB else a
    return a ^ b


@dataclass(frozen=True)
class OctalCode:
    """Take-and-break rules: digits[k-1] is the octal digit for removing k."""

    digits: tuple[int, ...]

    def __post_init__(self):
        if not self.digits or not any(self.digits):
            raise ValueError("octal code needs at least one nonzero digit")
        if any(not 0 <= d <= 7 for d in self.digits):
            raise ValueError(f"octal digits must be in 0..7: {self.digits}")

    @classmethod
    def from_string(cls, text: str) -> "OctalCode":
        text = text.strip()
        if not text.startswith("0."):
            raise ValueError(f"octal code must look like '0.137', got {text!r}")
        return cls(tuple(int(c) for c in text[2:]))

    def __str__(self) -> str:
        return "0." + "".join(str(d) for d in self.digits)


DAWSON = OctalCode.from_string("0.137")
MISERE_FORECLOSED_CODE = OctalCode.from_string("0.13337")


class ValueSequence:
    """Dense vector of game values indexed from 0; append-only by construction."""

    def __init__(self, values: np.ndarray, kind: str = ""):
        self._values = values
        self.kind = kind

    @classmethod
    def from_list(cls, vals: Iterable[GameValue], kind: str = "") -> "ValueSequence":
        arr = np.array(
            [_STAR_CODE if v is STAR else int(v) for v in vals], dtype=np.int64
        )
        return cls(arr, kind)

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, n: int) -> GameValue:
        if not 0 <= n < len(self._values):
            raise InsufficientData(
                f"{self.kind or 'sequence'} computed to {len(self._values) - 1}, "
                f"index {n} requested"
            )
        raw = int(self._values[n])
        return STAR if raw == _STAR_CODE else raw

    @property
    def raw(self) -> np.ndarray:
        """Internal int64 view; star encoded as -1.  Read-only by convention."""
        return self._values

    def to_csv(self) -> str:
        lines = ["n,value"]
        for n, raw in enumerate(self._values):
            lines.append(f"{n},{'*' if raw == _STAR_CODE else int(raw)}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PeriodDescriptor:
    preperiod: int
    period: int


def _mex_of(vals: np.ndarray) -> int:
    """mex over an int array; negative (star) entries ignored."""
    if vals.size == 0:
        return 0
    cap = vals.size + 1
    seen = np.zeros(cap + 1, dtype=bool)
    small = vals[(vals >= 0) & (vals <= cap)]
    seen[small] = True
    return int(np.argmin(seen))


def octal_grundy(code: OctalCode, n_max: int, kind: str = "") -> ValueSequence:
    """Grundy numbers of heaps 0..n_max under the given octal code."""
    g = np.zeros(n_max + 1, dtype=np.int64)
    digits = code.digits
    for h in range(1, n_max + 1):
        opts: list[np.ndarray] = []
        for k, d in enumerate(digits, start=1):
            if k > h:
                break
            if d & 1 and h == k:
                opts.append(np.zeros(1, dtype=np.int64))
            if d & 2 and h > k:
                opts.append(g[h - k : h - k + 1])
            if d & 4 and h - k >= 2:
                rem = h - k
                m = rem // 2
                left = g[1 : m + 1]
                right = g[rem - 1 : rem - m - 1 : -1]
                opts.append(left ^ right)
        g[h] = _mex_of(np.concatenate(opts)) if opts else 0
    return ValueSequence(g, kind or str(code))


def guy_smith_check(
    seq: ValueSequence, p: int, q: int, slack: int = 2
) -> bool:
    """Verify seq[n+p] == seq[n] for q < n <= 2(q+1) + p + slack.

    A passing window certifies periodicity for every n > q when the game's
    maximal removal is slack + 1, so q plays the role of a preperiod length.
    """
    lo = q + 1
    hi = 2 * lo + p + slack
    if len(seq) <= hi + p:
        raise InsufficientData(f"need values up to {hi + p}, have {len(seq) - 1}")
    raw = seq.raw
    window = np.arange(lo, hi + 1)
    return bool(np.array_equal(raw[window + p], raw[window]))


def detect_period(
    seq: ValueSequence, max_p: int, min_window: int = 20
) -> Optional[PeriodDescriptor]:
    """Smallest (preperiod, period) consistent with the observed tail.

    For each candidate period p, the preperiod is the first index from which
    the whole remaining tail repeats with step p; a candidate counts only if
    the matched tail holds at least ``min_window`` values.  Preference is
    lexicographic (preperiod, then period).
    """
    raw = seq.raw
    n = len(raw)
    best: Optional[tuple[int, int]] = None
    for p in range(1, min(max_p, n - 1) + 1):
        diff = raw[p:] != raw[:-p]
        mismatches = np.flatnonzero(diff)
        q = int(mismatches[-1]) + 1 if mismatches.size else 0
        if (n - p) - q < min_window:
            continue
        if best is None or (q, p) < best:
            best = (q, p)
    if best is None:
        return None
    return PeriodDescriptor(preperiod=best[0], period=best[1])


class PeriodicSequence:
    """O(1) lookup of an eventually periodic sequence, certified beforehand."""

    def __init__(self, seq: ValueSequence, descriptor: PeriodDescriptor):
        q, p = descriptor.preperiod, descriptor.period
        if len(seq) < q + p:
            raise InsufficientData("sequence shorter than preperiod + period")
        self.seq = seq
        self.descriptor = descriptor

    def value_at(self, n: int) -> GameValue:
        q, p = self.descriptor.preperiod, self.descriptor.period
        if n < len(self.seq):
            return self.seq[n]
        return self.seq[q + (n - q) % p]
