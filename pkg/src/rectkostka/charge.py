"""Generalized charge and cocharge on LR words, and Lascoux-Schutzenberger charge.

``charge_R`` averages a weighted sum of two-rectangle statistics over all
reorderings of ``R``.  The reorderings act through ``tau_p``; since that
action is a group action, the average over ``S_t`` equals the average over
the orbit of ``(R, P(w))``, which is what gets computed.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from math import comb
from typing import Sequence

from .core import Partition, Tableau, content, restrict_word, row_word
from .lrwords import Rect, RectSeq, is_lr_word
from .embed import tau_tab
from .rsk import p_shape, p_tableau

MAX_RECTS = 8


class ChargeError(ValueError):
    pass


def _pair_shape(w: Sequence[int], R: RectSeq, i: int) -> Partition:
    lo = R.alphabets[i - 1][0]
    hi = R.alphabets[i][1]
    return p_shape(restrict_word(w, lo, hi))


def d_shape(shape: Sequence[int], r1: Rect, r2: Rect) -> int:
    """Cells of ``shape`` strictly east of column ``max(mu1, mu2)``."""
    c = max(r1.cols, r2.cols)
    return sum(max(0, x - c) for x in shape)


def dtilde_shape(shape: Sequence[int], r1: Rect, r2: Rect) -> int:
    """Cells of ``shape`` strictly below row ``max(eta1, eta2)``."""
    return sum(shape[max(r1.rows, r2.rows):])


def d_pair(w: Sequence[int], r1: Rect, r2: Rect) -> int:
    R = RectSeq((r1, r2))
    if not is_lr_word(w, R):
        raise ChargeError(f"{w} is not an LR word for {R}")
    shape = p_shape(w)
    d, dt = d_shape(shape, r1, r2), dtilde_shape(shape, r1, r2)
    overlap = min(r1.rows, r2.rows) * min(r1.cols, r2.cols)
    assert d + dt == overlap, (w, r1, r2, d, dt)
    return d


def dtilde_pair(w: Sequence[int], r1: Rect, r2: Rect) -> int:
    d = d_pair(w, r1, r2)
    return min(r1.rows, r2.rows) * min(r1.cols, r2.cols) - d


def _weighted(T: Tableau, R: RectSeq, stat) -> int:
    w = row_word(T)
    t = R.t
    total = 0
    for i in range(1, t):
        shape = _pair_shape(w, R, i)
        total += (t - i) * stat(shape, R.rects[i - 1], R.rects[i])
    return total


def orbit(T: Tableau, R: RectSeq) -> dict[tuple[RectSeq, Tableau], None]:
    """All states ``(sigma R, sigma T)`` reachable by the ``tau_p``."""
    if R.t > MAX_RECTS:
        raise ChargeError(f"{R.t} rectangles exceeds the limit of {MAX_RECTS}")
    seen = {(R, T): None}
    queue = deque([(R, T)])
    while queue:
        R1, T1 = queue.popleft()
        for p in range(1, R1.t):
            if R1.rects[p - 1] == R1.rects[p]:
                continue
            state = (R1.swap(p), tau_tab(T1, R1, p))
            if state not in seen:
                seen[state] = None
                queue.append(state)
    return seen


@lru_cache(maxsize=None)
def _charges(T: Tableau, R: RectSeq) -> tuple[int, int]:
    states = orbit(T, R)
    size = len(states)
    ch = sum(_weighted(T1, R1, d_shape) for R1, T1 in states)
    co = sum(_weighted(T1, R1, dtilde_shape) for R1, T1 in states)
    if ch % size or co % size:
        raise AssertionError(f"orbit sum not divisible: {ch}, {co} over {size} states")
    return ch // size, co // size


def charge_tab(T: Tableau, R: RectSeq) -> int:
    return _charges(T, R)[0]


def cocharge_tab(T: Tableau, R: RectSeq) -> int:
    return _charges(T, R)[1]


def _check(w: Sequence[int], R: RectSeq) -> Tableau:
    if not is_lr_word(w, R):
        raise ChargeError(f"{tuple(w)} is not an LR word for {R}")
    return p_tableau(tuple(w))


def charge_R(w: Sequence[int], R: RectSeq) -> int:
    return charge_tab(_check(w, R), R)


def cocharge_R(w: Sequence[int], R: RectSeq) -> int:
    return cocharge_tab(_check(w, R), R)


def n_stat(R: RectSeq) -> int:
    if not R.rects:
        return 0
    height = max(r.rows for r in R.rects)
    width = max(r.cols for r in R.rects)
    total = 0
    for i in range(1, height + 1):
        for j in range(1, width + 1):
            r = sum(1 for x in R.rects if x.rows >= i and x.cols >= j)
            total += comb(r, 2)
    return total


# -- classical charge ---------------------------------------------------------

def _partition_content(w: Sequence[int]) -> tuple[int, ...]:
    c = content(w)
    if any(c[i] < c[i + 1] for i in range(len(c) - 1)) or (c and c[-1] == 0):
        raise ChargeError(f"content {c} is not a partition")
    return c


def ls_charge(w: Sequence[int]) -> int:
    """Charge by extracting standard subwords, scanning right to left."""
    c = _partition_content(w)
    letters = list(w)
    used = [False] * len(letters)
    left = list(c)
    total = 0
    while any(left):
        top = max(i for i in range(len(left)) if left[i]) + 1
        pos = len(letters)
        index = 0
        for x in range(1, top + 1):
            # next unused copy of x scanning leftwards from pos, cyclically
            found = None
            for k in range(pos - 1, -1, -1):
                if not used[k] and letters[k] == x:
                    found = k
                    break
            if found is None:
                if x > 1:
                    index += 1
                for k in range(len(letters) - 1, pos - 1, -1):
                    if not used[k] and letters[k] == x:
                        found = k
                        break
            used[found] = True
            left[x - 1] -= 1
            total += index
            pos = found
    return total


def n_mu(mu: Sequence[int]) -> int:
    return sum(i * m for i, m in enumerate(mu))


def ls_cocharge(w: Sequence[int]) -> int:
    return n_mu(_partition_content(w)) - ls_charge(w)
