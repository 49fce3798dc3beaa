"""Continued conjunctive compound (long rule): suspense values and strategy.

Suspense of a union is the maximum over components.  Both sequences have a
geometric period of ratio 2: the normal landmarks sit at 5(2^k - 1), the
misere ones at 7*2^k - 6 and 7*2^k - 5.
"""

import numpy as np

from .core import CompoundMove, Play, Position, path_options, vertex_result
from .errors import NotWinnable


def suspense(n: int, play: Play) -> int:
    """Closed-form suspense number of the n-path."""
    if n == 0:
        return 0
    if play is Play.NORMAL:
        k = 0
        while 5 * (2 ** (k + 1) - 1) - 1 < n:
            k += 1
        # block [5(2^k - 1), 5(2^(k+1) - 1) - 1]
        if n == 5 * (2**k - 1):
            return 2 * k
        if n == 5 * (2 ** (k + 1) - 1) - 1:
            return 2 * k + 2
        return 2 * k + 1
    k = 0
    while 7 * 2 ** (k + 1) - 7 < n:
        k += 1
    # block [7*2^k - 6, 7*2^(k+1) - 7]
    if n in (7 * 2**k - 6, 7 * 2**k - 5):
        return 2 * k + 1
    return 2 * k + 2


def suspense_by_recursion(n_max: int, play: Play) -> np.ndarray:
    """Independent route: the defining recursion, evaluated for 0..n_max.

    The winner delays: one more than the maximal even option suspense if any
    option is even, else one more than the minimal odd one; misere swaps the
    parities.  A union's suspense is the maximum over its parts.
    """
    s = np.zeros(n_max + 1, dtype=np.int64)
    good_parity = 0 if play is Play.NORMAL else 1
    for n in range(1, n_max + 1):
        singles = [s[n - 2] if n >= 2 else 0, s[n - 3] if n >= 3 else 0]
        m = (n - 3) // 2
        if m >= 1:
            splits = np.maximum(s[1 : m + 1], s[n - 4 : n - 4 - m : -1])
            opts = np.concatenate([np.array(singles, dtype=np.int64), splits])
        else:
            opts = np.array(singles, dtype=np.int64)
        good = opts[opts % 2 == good_parity]
        s[n] = 1 + (int(good.max()) if good.size else int(opts[opts % 2 != good_parity].min()))
    return s


def compound_suspense(p: Position, play: Play) -> int:
    return max((suspense(n, play) for n in p), default=0)


def ccc_outcome(p: Position, play: Play) -> str:
    s = compound_suspense(p, play)
    if play is Play.NORMAL:
        return "P" if s % 2 == 0 else "N"
    return "P" if s % 2 == 1 else "N"


def _normal_landmark_below(n: int) -> int:
    """Largest 5(2^k - 1) strictly below n."""
    t = 0
    k = 1
    while 5 * (2**k - 1) < n:
        t = 5 * (2**k - 1)
        k += 1
    return t


def _misere_block_anchor(n: int) -> int:
    """The 7*2^k - 6 landmark of the block containing n (n >= 3)."""
    k = 0
    while 7 * 2 ** (k + 1) - 7 < n:
        k += 1
    return 7 * 2**k - 6


def ccc_best_move(p: Position, play: Play) -> CompoundMove:
    """A full conjunctive move whose successor has even (odd in misere) suspense.

    Components above the governing landmark are cut down to the landmark
    path, possibly with a shorter path split off; everything below it may
    move freely since its parts cannot raise the successor's maximum.
    """
    if ccc_outcome(p, play) == "P":
        raise NotWinnable(f"position {p} is a P-position")
    longest = p[0]
    choices = []
    if play is Play.NORMAL:
        t = _normal_landmark_below(longest)
        for i, n in enumerate(p):
            if n <= t:
                choices.append((i, 1))
            elif n in (t + 1, t + 2):
                choices.append((i, 1))  # leaves the t-1 or t path
            else:
                choices.append((i, t + 2))  # splits into t and n-t-3
    else:
        u = _misere_block_anchor(longest)  # suspense one below the maximum here
        for i, n in enumerate(p):
            if n <= u + 1:
                choices.append((i, 1))
            elif n in (u + 2, u + 3):
                choices.append((i, 1))  # leaves the u or u+1 path
            else:
                choices.append((i, u + 3))  # splits into u+1 and n-u-4
    return CompoundMove(tuple(choices))
