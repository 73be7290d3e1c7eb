"""Schensted insertion, Knuth equivalence and the operators built on them.

Cells returned to callers are 1-based ``(row, col)`` pairs; the internal
helpers work on mutable lists of rows with 0-based indices.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import Tableau, Word


class InvalidPair(ValueError):
    pass


@dataclass(frozen=True)
class RSKPair:
    p: Tableau
    q: Tableau


# -- low level ----------------------------------------------------------------

def _bump(rows: list[list[int]], x: int) -> int:
    """Row-insert ``x`` in place; return the row index of the new cell."""
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return i
        row = rows[i]
        k = bisect_right(row, x)
        if k == len(row):
            row.append(x)
            return i
        x, row[k] = row[k], x
        i += 1


def _unbump(rows: list[list[int]], i: int) -> int:
    """Reverse row insertion from the last cell of row ``i``."""
    y = rows[i].pop()
    if not rows[i]:
        rows.pop()
    for r in range(i - 1, -1, -1):
        row = rows[r]
        k = bisect_left(row, y) - 1
        y, row[k] = row[k], y
    return y


def _col_bump(cols: list[list[int]], x: int) -> int:
    """Column-insert ``x`` into a tableau stored by columns; return column index."""
    j = 0
    while True:
        if j == len(cols):
            cols.append([x])
            return j
        col = cols[j]
        k = bisect_left(col, x)
        if k == len(col):
            col.append(x)
            return j
        x, col[k] = col[k], x
        j += 1


def _rows(t: Tableau) -> list[list[int]]:
    if t.inner:
        raise ValueError("straight-shape tableau required")
    return [list(r) for r in t.rows]


def _freeze(rows: list[list[int]]) -> Tableau:
    return Tableau(tuple(tuple(r) for r in rows))


def _cols_to_rows(cols: list[list[int]]) -> list[list[int]]:
    height = max((len(c) for c in cols), default=0)
    return [[c[i] for c in cols if len(c) > i] for i in range(height)]


def _rows_to_cols(rows: list[list[int]]) -> list[list[int]]:
    width = len(rows[0]) if rows else 0
    return [[r[j] for r in rows if len(r) > j] for j in range(width)]


# -- insertion ----------------------------------------------------------------

def row_insert(t: Tableau, x: int) -> tuple[Tableau, tuple[int, int]]:
    rows = _rows(t)
    i = _bump(rows, x)
    return _freeze(rows), (i + 1, len(rows[i]))


@lru_cache(maxsize=1 << 18)
def p_tableau(w: Word) -> Tableau:
    rows: list[list[int]] = []
    for x in w:
        _bump(rows, x)
    return _freeze(rows)


def p_shape(w: Sequence[int]) -> tuple[int, ...]:
    rows: list[list[int]] = []
    for x in w:
        _bump(rows, x)
    return tuple(len(r) for r in rows)


def rsk(w: Sequence[int]) -> RSKPair:
    rows: list[list[int]] = []
    qrows: list[list[int]] = []
    for k, x in enumerate(w, 1):
        i = _bump(rows, x)
        if i == len(qrows):
            qrows.append([])
        qrows[i].append(k)
    return RSKPair(_freeze(rows), _freeze(qrows))


def q_tableau(w: Sequence[int]) -> Tableau:
    return rsk(w).q


def inverse_rsk(p: Tableau, q: Tableau) -> Word:
    if p.shape != q.shape:
        raise InvalidPair(f"shape mismatch {p.shape} vs {q.shape}")
    rows = _rows(p)
    where = {x: i for i, r in enumerate(q.rows) for x in r}
    n = len(q)
    if sorted(where) != list(range(1, n + 1)):
        raise InvalidPair("recording tableau is not standard")
    out = []
    for k in range(n, 0, -1):
        out.append(_unbump(rows, where[k]))
    return tuple(reversed(out))


def knuth_equivalent(v: Sequence[int], w: Sequence[int]) -> bool:
    return p_tableau(tuple(v)) == p_tableau(tuple(w))


def reverse_bump(t: Tableau, cell: tuple[int, int]) -> tuple[Tableau, int]:
    """Undo a row insertion that created the corner ``cell`` (1-based).

    Returns ``(U, x)`` with ``P(word(U) x) == t``.
    """
    rows = _rows(t)
    i, j = cell
    if len(rows[i - 1]) != j or (i < len(rows) and len(rows[i]) >= j):
        raise ValueError(f"{cell} is not a corner of {t.shape}")
    x = _unbump(rows, i - 1)
    return _freeze(rows), x


def column_insert(x: int, t: Tableau) -> tuple[Tableau, tuple[int, int]]:
    """``P(x word(t))`` and the new cell."""
    cols = _rows_to_cols(_rows(t))
    j = _col_bump(cols, x)
    return _freeze(_cols_to_rows(cols)), (len(cols[j]), j + 1)


def reverse_column_bump(t: Tableau, cell: tuple[int, int]) -> tuple[int, Tableau]:
    """Undo a column insertion ending at the corner ``cell``.

    Returns ``(x, U)`` with ``P(x word(U)) == t``.
    """
    cols = _rows_to_cols(_rows(t))
    i, j = cell
    if len(cols[j - 1]) != i or (j < len(cols) and len(cols[j]) >= i):
        raise ValueError(f"{cell} is not a corner of {t.shape}")
    y = cols[j - 1].pop()
    if not cols[j - 1]:
        cols.pop()
    for c in range(j - 2, -1, -1):
        col = cols[c]
        k = bisect_right(col, y) - 1
        y, col[k] = col[k], y
    return y, _freeze(_cols_to_rows(cols))


def corners(shape: Sequence[int]) -> list[tuple[int, int]]:
    """Removable cells, 1-based, top row first."""
    out = []
    for i, r in enumerate(shape):
        nxt = shape[i + 1] if i + 1 < len(shape) else 0
        if r > nxt:
            out.append((i + 1, r))
    return out


# -- standard tableaux ------------------------------------------------------------

def _require_standard(q: Tableau) -> None:
    if not q.is_standard():
        raise ValueError("standard tableau required")


def evacuation(q: Tableau) -> Tableau:
    _require_standard(q)
    n = len(q)
    w = [n + 1 - x for x in reversed([x for r in reversed(q.rows) for x in r])]
    return p_tableau(tuple(w))


def _promote(q: Tableau) -> Tableau:
    """Delete the largest entry, slide the hole to the corner (1,1), add one
    to every entry and put 1 in the hole."""
    rows = _rows(q)
    n = len(q)
    i = next(k for k, r in enumerate(rows) if r and r[-1] == n)
    j = len(rows[i]) - 1
    while i > 0 or j > 0:
        left = rows[i][j - 1] if j > 0 else -1
        up = rows[i - 1][j] if i > 0 else -1
        if left > up:
            rows[i][j] = left
            j -= 1
        else:
            rows[i][j] = up
            i -= 1
    rows[0][0] = 0
    return _freeze([[x + 1 for x in r] for r in rows])


def _demote(q: Tableau) -> Tableau:
    """Inverse of :func:`_promote`."""
    rows = _rows(q)
    n = len(q)
    i = j = 0
    while True:
        right = rows[i][j + 1] if j + 1 < len(rows[i]) else None
        down = rows[i + 1][j] if i + 1 < len(rows) and j < len(rows[i + 1]) else None
        if right is None and down is None:
            break
        if down is None or (right is not None and right < down):
            rows[i][j] = right
            j += 1
        else:
            rows[i][j] = down
            i += 1
    rows[i][j] = n + 1
    return _freeze([[x - 1 for x in r] for r in rows])


def promotion(q: Tableau) -> Tableau:
    """Promotion on standard tableaux.

    Direction: the largest entry is removed and 1 is inserted at the corner,
    which is the recording-tableau effect of moving the last letter of a word
    to the front (see ``test_rsk.py``).
    """
    _require_standard(q)
    if len(q) == 0:
        return q
    return _promote(q)


def promotion_inverse(q: Tableau) -> Tableau:
    _require_standard(q)
    if len(q) == 0:
        return q
    return _demote(q)


def standard_tableaux(shape: Sequence[int]) -> list[Tableau]:
    """All standard tableaux of a straight shape, in lexicographic order of rows."""
    shape = tuple(shape)
    n = sum(shape)
    out: list[Tableau] = []
    rows: list[list[int]] = [[] for _ in shape]

    def rec(k: int) -> None:
        if k > n:
            out.append(_freeze([list(r) for r in rows]))
            return
        for i in range(len(shape)):
            if len(rows[i]) < shape[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(k + 1)
                rows[i].pop()

    rec(1)
    out.sort(key=lambda t: t.rows)
    return out


# -- crystal reflections ------------------------------------------------------------

def crystal_reflection(w: Sequence[int], r: int) -> Word:
    """The simple reflection ``s_r`` acting on words by the bracketing rule.

    Each ``r+1`` is paired with the nearest unpaired ``r`` to its right; the
    unpaired letters read ``r^a (r+1)^b`` and are rewritten ``r^b (r+1)^a``.
    """
    stack: list[int] = []
    free_r: list[int] = []
    for k, x in enumerate(w):
        if x == r + 1:
            stack.append(k)
        elif x == r:
            if stack:
                stack.pop()
            else:
                free_r.append(k)
    if len(free_r) == len(stack):
        return tuple(w)
    free = free_r + stack
    b = len(stack)
    out = list(w)
    for idx, k in enumerate(free):
        out[k] = r if idx < b else r + 1
    return tuple(out)


def longest_reduced_word(lo: int, hi: int) -> list[int]:
    """``s_1 s_2 s_1 s_3 s_2 s_1 ...`` for the letters ``lo..hi``."""
    word = []
    for top in range(1, hi - lo + 1):
        word.extend(lo + k - 1 for k in range(top, 0, -1))
    return word


def w0_action(w: Sequence[int], lo: int, hi: int, reduced_word: Sequence[int] | None = None) -> Word:
    """Action of the longest permutation of ``[lo, hi]``; other letters fixed."""
    if reduced_word is None:
        reduced_word = longest_reduced_word(lo, hi)
    out = tuple(w)
    for r in reversed(reduced_word):
        out = crystal_reflection(out, r)
    return out


def permute_letters(w: Sequence[int], target_order: Sequence[int]) -> Word:
    """Act by the permutation sending ``target_order[k]`` to ``k + 1``.

    ``target_order`` lists every letter of ``[1, n]``.  The permutation is
    written as a reduced word by bubble sort and applied through crystal
    reflections.
    """
    rank = {x: k for k, x in enumerate(target_order)}
    # cur[m] is the original letter whose weight currently sits at value m + 1
    cur = sorted(target_order)
    out = tuple(w)
    for k in range(len(cur)):
        for m in range(len(cur) - 1 - k):
            if rank[cur[m]] > rank[cur[m + 1]]:
                out = crystal_reflection(out, m + 1)
                cur[m], cur[m + 1] = cur[m + 1], cur[m]
    return out
