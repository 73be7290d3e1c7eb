"""Partitions, words and column-strict tableaux.

Partitions and words are plain tuples of ints.  A tableau is an immutable
:class:`Tableau` holding its rows top row first; skew tableaux carry the
inner partition separately and their rows list only the filled cells.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Word = tuple[int, ...]


class TableauError(ValueError):
    pass


def partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts if int(x) != 0)
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {p}")
    return p


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def dominance_leq(p: Sequence[int], q: Sequence[int]) -> bool | None:
    """True iff ``q`` dominates ``p``; ``None`` when the sizes differ."""
    if sum(p) != sum(q):
        return None
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sq < sp:
            return False
    return True


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in partitions_of(n - first, first, rest_len):
            yield (first,) + rest


def content(w: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    w = tuple(w)
    if n is None:
        n = max(w, default=0)
    c = [0] * n
    for x in w:
        c[x - 1] += 1
    return tuple(c)


def restrict_word(w: Sequence[int], lo: int, hi: int) -> Word:
    return tuple(x for x in w if lo <= x <= hi)


@dataclass(frozen=True)
class Tableau:
    """A column-strict filling of ``outer / inner``.

    ``rows[i]`` holds the entries of row ``i`` strictly to the right of
    ``inner[i]``.  Straight tableaux have ``inner == ()``.
    """

    rows: tuple[tuple[int, ...], ...]
    inner: Partition = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        inner = tuple(x for x in self.inner if x)
        # rows past the inner shape with no entries carry no cells
        while rows and not rows[-1] and len(rows) > len(inner):
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "inner", inner)

    # shape data -----------------------------------------------------------
    def inner_at(self, i: int) -> int:
        return self.inner[i] if i < len(self.inner) else 0

    @property
    def shape(self) -> Partition:
        """Outer shape."""
        return tuple(x for x in self._outer_list() if x)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def __len__(self) -> int:
        return sum(len(r) for r in self.rows)

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(row, col, entry)`` with 0-based coordinates."""
        for i, r in enumerate(self.rows):
            off = self.inner_at(i)
            for j, x in enumerate(r):
                yield i, off + j, x

    def entry(self, i: int, j: int) -> int | None:
        if i >= len(self.rows):
            return None
        k = j - self.inner_at(i)
        r = self.rows[i]
        return r[k] if 0 <= k < len(r) else None

    def columns(self) -> list[list[int]]:
        """Entries of each column top to bottom (skew cells skipped)."""
        cols: dict[int, list[tuple[int, int]]] = {}
        for i, j, x in self.cells():
            cols.setdefault(j, []).append((i, x))
        return [[x for _, x in cols[j]] for j in sorted(cols)]

    def _outer_list(self) -> list[int]:
        out = [self.inner_at(i) + len(r) for i, r in enumerate(self.rows)]
        out.extend(self.inner[len(self.rows):])
        return out

    def is_column_strict(self) -> bool:
        if not _is_skew_shape(self._outer_list(), self.inner):
            return False
        for r in self.rows:
            if any(r[k] > r[k + 1] for k in range(len(r) - 1)):
                return False
        for i, j, x in self.cells():
            above = self.entry(i - 1, j) if i > 0 else None
            if above is not None and above >= x:
                return False
        return True

    def is_standard(self) -> bool:
        return self.is_column_strict() and sorted(self.letters()) == list(range(1, len(self) + 1))

    def letters(self) -> list[int]:
        return [x for r in self.rows for x in r]

    def content(self, n: int | None = None) -> tuple[int, ...]:
        return content(self.letters(), n)

    def transpose(self) -> "Tableau":
        """Reflect along the main diagonal (no relabeling)."""
        cols: dict[int, list[int]] = {}
        for i, j, x in self.cells():
            cols.setdefault(j, []).append(x)
        inner = conjugate(self.inner)
        width = max(self.shape, default=0)
        rows = tuple(tuple(cols.get(j, [])) for j in range(width))
        return Tableau(rows, inner)

    def shift(self, k: int) -> "Tableau":
        return Tableau(tuple(tuple(x + k for x in r) for r in self.rows), self.inner)

    # text / json ----------------------------------------------------------
    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "inner": list(self.inner),
                "rows": [list(r) for r in self.rows]}

    def __str__(self) -> str:
        return self.to_text() if self.rows else "(empty)"


def _is_skew_shape(outer: Sequence[int], inner: Sequence[int]) -> bool:
    outer = list(outer)
    inner = list(inner) + [0] * max(0, len(outer) - len(inner))
    if len(inner) > len(outer):
        return False
    return all(o > 0 for o in outer) and all(i <= o for i, o in zip(inner, outer)) and \
        all(outer[k] >= outer[k + 1] for k in range(len(outer) - 1)) and \
        all(inner[k] >= inner[k + 1] for k in range(len(inner) - 1))


def tableau(rows: Iterable[Iterable[int]], inner: Iterable[int] = ()) -> Tableau:
    """Build and validate a column-strict tableau."""
    t = Tableau(tuple(tuple(int(x) for x in r) for r in rows), tuple(inner))
    if not t.is_column_strict():
        raise TableauError(f"not column-strict:\n{t.to_text()}")
    return t


EMPTY = Tableau(())


def row_word(t: Tableau) -> Word:
    """Rows bottom to top, each left to right."""
    return tuple(x for r in reversed(t.rows) for x in r)


def col_word(t: Tableau) -> Word:
    """Columns left to right, each bottom to top."""
    return tuple(x for c in t.columns() for x in reversed(c))


def restrict_tableau(t: Tableau, lo: int, hi: int) -> Tableau:
    """Sub-filling on the letters in ``[lo, hi]``.

    The cells holding letters below ``lo`` form a straight subshape, which
    becomes the inner shape of the result.
    """
    inner = []
    rows = []
    for i, r in enumerate(t.rows):
        below = sum(1 for x in r if x < lo)
        inner.append(t.inner_at(i) + below)
        rows.append(tuple(x for x in r if lo <= x <= hi))
    return Tableau(tuple(rows), tuple(inner))


def parse_tableau_text(text: str) -> Tableau:
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([int(x) for x in line.replace(",", " ").split()])
    return tableau(rows)


def tableau_from_json(obj: dict) -> Tableau:
    t = tableau(obj["rows"], obj.get("inner", ()))
    if "shape" in obj and tuple(obj["shape"]) != t.shape:
        raise TableauError(f"declared shape {obj['shape']} does not match rows")
    return t


def dumps_tableau(t: Tableau) -> str:
    return json.dumps(t.to_json())
