"""Sequences of rectangles, LR words and LR tableaux, and the pseudo-order.

A rectangle is a pair ``(rows, cols)``; the text form is ``ROWSxCOLS``, so
``2x3`` is the partition ``(3, 3)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, NamedTuple, Sequence

from .core import Partition, Tableau, dominance_leq, partitions_of, row_word


class Rect(NamedTuple):
    rows: int
    cols: int

    @property
    def partition(self) -> Partition:
        return (self.cols,) * self.rows

    @property
    def size(self) -> int:
        return self.rows * self.cols

    def transpose(self) -> "Rect":
        return Rect(self.cols, self.rows)

    def __str__(self) -> str:
        return f"{self.rows}x{self.cols}"


class RectSpecError(ValueError):
    pass


@dataclass(frozen=True)
class RectSeq:
    rects: tuple[Rect, ...]

    def __post_init__(self):
        rects = tuple(Rect(int(r), int(c)) for r, c in self.rects)
        if any(r.rows < 1 or r.cols < 1 for r in rects):
            raise RectSpecError(f"rectangles need positive sides: {rects}")
        object.__setattr__(self, "rects", rects)

    @classmethod
    def parse(cls, spec: str) -> "RectSeq":
        spec = spec.strip()
        if not spec:
            return cls(())
        out = []
        for item in spec.split(","):
            try:
                r, c = item.strip().lower().split("x")
                out.append((int(r), int(c)))
            except ValueError:
                raise RectSpecError(f"bad rectangle {item!r}; expected ROWSxCOLS") from None
        return cls(tuple(out))

    @classmethod
    def of(cls, *rects: tuple[int, int]) -> "RectSeq":
        return cls(tuple(rects))

    @classmethod
    def from_partitions(cls, parts: Sequence[Sequence[int]]) -> "RectSeq":
        """Build from rectangular partitions, e.g. ``[(3, 3), (2, 2, 2)]``."""
        out = []
        for p in parts:
            if not p or len(set(p)) != 1:
                raise RectSpecError(f"not a rectangle: {p}")
            out.append((len(p), p[0]))
        return cls(tuple(out))

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rects)

    def __len__(self) -> int:
        return len(self.rects)

    def __iter__(self):
        return iter(self.rects)

    def __getitem__(self, i):
        return self.rects[i]

    @property
    def t(self) -> int:
        return len(self.rects)

    @property
    def n(self) -> int:
        return sum(r.rows for r in self.rects)

    @property
    def size(self) -> int:
        return sum(r.size for r in self.rects)

    @cached_property
    def alphabets(self) -> tuple[tuple[int, int], ...]:
        """Consecutive letter intervals ``(lo, hi)``, one per rectangle."""
        out = []
        lo = 1
        for r in self.rects:
            out.append((lo, lo + r.rows - 1))
            lo += r.rows
        return tuple(out)

    @cached_property
    def gamma(self) -> tuple[int, ...]:
        return tuple(r.cols for r in self.rects for _ in range(r.rows))

    @cached_property
    def xi(self) -> dict[int, Partition]:
        out: dict[int, list[int]] = {}
        for r in self.rects:
            out.setdefault(r.cols, []).append(r.rows)
        return {k: tuple(sorted(v, reverse=True)) for k, v in sorted(out.items())}

    def xi_tuple(self, width: int | None = None) -> tuple[Partition, ...]:
        width = max(self.xi, default=0) if width is None else width
        return tuple(self.xi.get(k, ()) for k in range(1, width + 1))

    def rows_seq(self) -> "RectSeq":
        return RectSeq(tuple((1, r.cols) for r in self.rects for _ in range(r.rows)))

    def transpose(self) -> "RectSeq":
        return RectSeq(tuple(r.transpose() for r in self.rects))

    def is_dominant(self) -> bool:
        return all(self.rects[i].cols >= self.rects[i + 1].cols for i in range(self.t - 1))

    def is_nested(self) -> bool:
        """``R_j`` contains ``R_{j+1}`` for all ``j``."""
        return all(a.cols >= b.cols and a.rows >= b.rows for a, b in zip(self.rects, self.rects[1:]))

    def canonical(self) -> "RectSeq":
        """Dominant form: width descending, then height descending."""
        return RectSeq(tuple(sorted(self.rects, key=lambda r: (-r.cols, -r.rows))))

    def keys(self) -> tuple[Tableau, ...]:
        return tuple(key_rect(r.cols, r.rows, lo) for r, (lo, _) in zip(self.rects, self.alphabets))

    def swap(self, p: int) -> "RectSeq":
        """Exchange rectangles ``p`` and ``p + 1`` (1-based)."""
        r = list(self.rects)
        r[p - 1], r[p] = r[p], r[p - 1]
        return RectSeq(tuple(r))

    def without_first(self) -> "RectSeq":
        return RectSeq(self.rects[1:])


def seq_invariants(R: RectSeq) -> dict:
    return {
        "gamma": R.gamma,
        "xi": R.xi,
        "rows": R.rows_seq(),
        "transpose": R.transpose(),
        "n_alphabet": R.n,
        "alphabets": R.alphabets,
    }


def key_rect(k: int, m: int, lo: int = 1) -> Tableau:
    """Rectangle with ``m`` rows and ``k`` columns, row ``i`` filled with ``lo + i``."""
    if m < 0 or k < 0:
        raise ValueError("negative rectangle")
    return Tableau(tuple((lo + i,) * k for i in range(m)))


def key_in(k: int, m: int, alphabet: tuple[int, int]) -> Tableau:
    lo, hi = alphabet
    if hi - lo + 1 < m:
        raise ValueError(f"alphabet {alphabet} too small for {m} rows")
    return key_rect(k, m, lo)


# -- LR words -----------------------------------------------------------------

def _lattice_ok(w: Sequence[int], R: RectSeq) -> bool:
    n = R.n
    counts = [0] * (n + 2)
    lows = [0] * (n + 2)
    for (lo, hi), _ in zip(R.alphabets, R.rects):
        for x in range(lo, hi + 1):
            lows[x] = lo
    for x in reversed(w):
        if x < 1 or x > n:
            return False
        counts[x] += 1
        if x > lows[x] and counts[x] > counts[x - 1]:
            return False
    return all(counts[x] == rect.cols
               for rect, (lo, hi) in zip(R.rects, R.alphabets) for x in range(lo, hi + 1))


def is_lr_word(w: Sequence[int], R: RectSeq) -> bool:
    """``P(w|A_i)`` is the key of ``R_i`` for every ``i``.

    Decided with the equivalent lattice test on each subalphabet (read right
    to left, each letter occurs at most as often as its predecessor).
    """
    return _lattice_ok(w, R)


def is_lr_tableau(t: Tableau, R: RectSeq) -> bool:
    return t.is_straight and t.is_column_strict() and is_lr_word(row_word(t), R)


def column_strict_fillings(shape: Sequence[int], cont: Sequence[int]) -> Iterator[Tableau]:
    """Column-strict tableaux of a straight shape and content ``cont``, in
    lexicographic order of their rows."""
    shape = tuple(shape)
    if sum(shape) != sum(cont):
        return
    n = len(cont)
    rows: list[list[int]] = [[] for _ in shape]
    left = list(cont)
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]

    def rec(k: int):
        if k == len(cells):
            yield Tableau(tuple(tuple(r) for r in rows))
            return
        i, j = cells[k]
        lo = rows[i][j - 1] if j > 0 else 1
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        # remaining cells in this column below need larger letters
        below = sum(1 for ii in range(i + 1, len(shape)) if shape[ii] > j)
        for x in range(lo, n + 1 - below):
            if left[x - 1]:
                left[x - 1] -= 1
                rows[i].append(x)
                yield from rec(k + 1)
                rows[i].pop()
                left[x - 1] += 1

    yield from rec(0)


@lru_cache(maxsize=None)
def enumerate_lrt(shape: tuple[int, ...], R: RectSeq) -> tuple[Tableau, ...]:
    """LR tableaux of the given shape for ``R`` in lexicographic order."""
    shape = tuple(shape)
    if sum(shape) != R.size or len(shape) > R.n:
        return ()
    return tuple(t for t in column_strict_fillings(shape, R.gamma) if _lattice_ok(row_word(t), R))


def lrt_shapes(R: RectSeq) -> list[Partition]:
    """Candidate shapes: partitions of ``|R|`` with at most ``n`` rows."""
    return list(partitions_of(R.size, max_len=R.n))


@lru_cache(maxsize=None)
def all_lrt(R: RectSeq) -> tuple[Tableau, ...]:
    out: list[Tableau] = []
    for lam in lrt_shapes(R):
        out.extend(enumerate_lrt(lam, R))
    return tuple(out)


def unique_lrt(shape: tuple[int, ...], R: RectSeq) -> Tableau | None:
    """The LR tableau of ``shape`` when ``R`` has at most two rectangles."""
    found = enumerate_lrt(tuple(shape), R)
    if len(found) > 1:
        raise AssertionError(f"{len(found)} LR tableaux of shape {shape} for {R}")
    return found[0] if found else None


# -- pseudo-order and chains --------------------------------------------------

def pseudo_geq(R: RectSeq, S: RectSeq) -> bool:
    """``xi(R)`` dominates ``xi(S)`` width by width (equal cell totals required)."""
    widths = set(R.xi) | set(S.xi)
    for k in widths:
        a, b = R.xi.get(k, ()), S.xi.get(k, ())
        if dominance_leq(b, a) is not True:
            return False
    return True


@dataclass(frozen=True)
class ElementaryStep:
    """``E2`` exchanges rectangles ``position`` and ``position + 1``; ``E1``
    turns ``(k^a), (k^b)`` at ``position, position + 1`` into
    ``(k^(a-1)), (k^(b+1))``.  ``b == 0`` means the second rectangle is
    absent and gets created.  Embeddings only use ``E1`` at position 1."""

    kind: str
    position: int
    k: int = 0
    a: int = 0
    b: int = 0

    def __str__(self) -> str:
        if self.kind == "E2":
            return f"E2(tau_{self.position})"
        return f"E1(p={self.position}, k={self.k}, {self.a},{self.b} -> {self.a - 1},{self.b + 1})"


class ChainError(ValueError):
    pass


def apply_step(R: RectSeq, step: ElementaryStep) -> RectSeq:
    p = step.position
    if step.kind == "E2":
        if not 1 <= p < R.t:
            raise ChainError(f"bad E2 position {p} for {R}")
        return R.swap(p)
    if step.kind != "E1":
        raise ChainError(f"unknown step kind {step.kind}")
    k, a, b = step.k, step.a, step.b
    if a - 1 < b + 1:
        raise ChainError(f"E1 needs a-1 >= b+1, got a={a}, b={b}")
    rects = list(R.rects)
    if rects[p - 1] != Rect(a, k):
        raise ChainError(f"rectangle {p} of {R} is not {a}x{k}")
    if b == 0:
        rects[p - 1:p] = [Rect(a - 1, k), Rect(1, k)]
    else:
        if p >= len(rects) or rects[p] != Rect(b, k):
            raise ChainError(f"rectangle {p + 1} of {R} is not {b}x{k}")
        rects[p - 1:p + 1] = [Rect(a - 1, k), Rect(b + 1, k)]
    return RectSeq(tuple(rects))


def replay(R: RectSeq, steps: Sequence[ElementaryStep]) -> RectSeq:
    for s in steps:
        R = apply_step(R, s)
    return R


def _sort_steps(rects: list[Rect], key, rng: random.Random | None) -> list[ElementaryStep]:
    """Adjacent swaps putting ``rects`` in ``key`` order; equal rectangles are
    never swapped.  Mutates ``rects``."""
    steps = []
    while True:
        bad = [i for i in range(len(rects) - 1)
               if key(rects[i]) > key(rects[i + 1])]
        if not bad:
            return steps
        i = rng.choice(bad) if rng else bad[0]
        rects[i], rects[i + 1] = rects[i + 1], rects[i]
        steps.append(ElementaryStep("E2", i + 1))


def _move_to(rects: list[Rect], src: int, dst: int) -> list[ElementaryStep]:
    """Adjacent swaps moving ``rects[src]`` left to ``dst``; swaps of equal
    rectangles are trivial and omitted.  Mutates ``rects``."""
    steps = []
    while src > dst:
        if rects[src - 1] != rects[src]:
            steps.append(ElementaryStep("E2", src))
        rects[src - 1], rects[src] = rects[src], rects[src - 1]
        src -= 1
    return steps


def _canon_key(r: Rect):
    return (-r.cols, -r.rows)


def _dominance_moves(cur: Partition, target: Partition) -> list[tuple[int, int]]:
    """Single-box moves ``i -> j`` (``i < j``) from ``cur`` keeping a partition
    that still dominates ``target``.  ``j == len(cur)`` creates a new part."""
    moves = []
    padded = list(cur) + [0]
    for i in range(len(cur)):
        for j in range(i + 1, len(padded)):
            if padded[i] - 1 < padded[j] + 1:
                continue
            nxt = padded[:]
            nxt[i] -= 1
            nxt[j] += 1
            new = tuple(sorted((x for x in nxt if x), reverse=True))
            if dominance_leq(target, new):
                moves.append((i, j))
    return moves


def chain_between(R: RectSeq, S: RectSeq, rng: random.Random | None = None) -> list[ElementaryStep]:
    """Elementary steps taking ``R`` to ``S``.

    Default: sort into dominant form, then for each single-box move within a
    width class bring the two rectangles to the front and apply ``E1`` there,
    and finally reorder to ``S``.  With ``rng`` the swaps and splits are chosen at random, giving
    a different but valid chain.
    """
    if not pseudo_geq(R, S):
        raise ChainError(f"{R} does not dominate {S}")
    steps: list[ElementaryStep] = []
    rects = list(R.rects)
    steps += _sort_steps(rects, _canon_key, rng)
    target_xi = S.xi
    while True:
        cur = RectSeq(tuple(rects))
        todo = [k for k in cur.xi if cur.xi[k] != target_xi.get(k, ())]
        if not todo:
            break
        k = rng.choice(todo) if rng else todo[0]
        heights = cur.xi[k]
        moves = _dominance_moves(heights, target_xi[k])
        i, j = rng.choice(moves) if rng else moves[0]
        a = heights[i]
        b = heights[j] if j < len(heights) else 0
        # the pair must sit at positions 1, 2 for an E1 step
        cands = [pos for pos, r in enumerate(rects) if r == Rect(a, k)]
        steps += _move_to(rects, rng.choice(cands) if rng else cands[0], 0)
        if b:
            cands = [pos for pos, r in enumerate(rects) if pos > 0 and r == Rect(b, k)]
            steps += _move_to(rects, rng.choice(cands) if rng else cands[0], 1)
        step = ElementaryStep("E1", 1, k, a, b)
        rects = list(apply_step(RectSeq(tuple(rects)), step).rects)
        steps.append(step)
        steps += _sort_steps(rects, _canon_key, rng)
    # reorder the canonical form into S
    target = list(S.rects)
    for idx in range(len(target)):
        src = next(pos for pos in range(idx, len(rects)) if rects[pos] == target[idx])
        steps += _move_to(rects, src, idx)
    if replay(R, steps) != S:
        raise AssertionError("chain does not reach target")
    return steps


def dominant_sequences(gamma: Sequence[int]) -> list[RectSeq]:
    """All canonical dominant ``R`` with ``gamma(R) == gamma`` (a partition)."""
    runs: list[tuple[int, int]] = []
    for x in gamma:
        if runs and runs[-1][0] == x:
            runs[-1] = (x, runs[-1][1] + 1)
        else:
            runs.append((x, 1))
    out: list[RectSeq] = [RectSeq(())]
    for width, m in runs:
        nxt = []
        for R in out:
            for heights in partitions_of(m):
                nxt.append(RectSeq(R.rects + tuple(Rect(h, width) for h in heights)))
        out = nxt
    return out


def sequences_up_to(max_cells: int, max_rects: int = 3, min_cells: int = 1) -> list[RectSeq]:
    """Every ordered sequence of at most ``max_rects`` rectangles with total
    size in ``[min_cells, max_cells]``."""
    shapes = [Rect(r, c) for r in range(1, max_cells + 1) for c in range(1, max_cells + 1)
              if r * c <= max_cells]
    out: list[RectSeq] = []

    def rec(prefix: list[Rect], cells: int):
        if prefix and cells >= min_cells:
            out.append(RectSeq(tuple(prefix)))
        if len(prefix) == max_rects:
            return
        for r in shapes:
            if cells + r.size <= max_cells:
                prefix.append(r)
                rec(prefix, cells + r.size)
                prefix.pop()

    rec([], 0)
    return out
