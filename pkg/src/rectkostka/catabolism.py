"""Slicing, row and column catabolism, and the catabolism multi-type."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Partition, Tableau, dominance_leq, restrict_tableau, row_word
from .lrwords import Rect, RectSeq, key_rect
from .rsk import p_tableau


def _word_rows(rows) -> tuple[int, ...]:
    return tuple(x for r in reversed(rows) for x in r)


def H(S: Tableau, r: int) -> Tableau:
    """``P(S_n S_s)``: rows ``1..r`` read before the rows below."""
    return p_tableau(_word_rows(S.rows[:r]) + _word_rows(S.rows[r:]))


def V(S: Tableau, c: int) -> Tableau:
    """``P(S_e S_w)``: cells east of column ``c`` read before the rest."""
    east, west = [], []
    for i, row in enumerate(S.rows):
        cut = max(0, min(len(row), c - S.inner_at(i)))
        west.append(row[:cut])
        east.append(row[cut:])
    return p_tableau(_word_rows(east) + _word_rows(west))


def slice_tableau(S: Tableau, mode: str, k: int) -> Tableau:
    if mode == "row":
        return H(S, k)
    if mode == "col":
        return V(S, k)
    raise ValueError(f"unknown slice mode {mode}")


class CatabolismError(ValueError):
    pass


def remove_key(S: Tableau, rect: Rect, base: int = 0) -> Tableau:
    """``S - Y``: the skew tableau left after deleting the key block of
    ``rect`` in letters ``base + 1 .. base + rows``."""
    lo, hi = base + 1, base + rect.rows
    if restrict_tableau(S, lo, hi) != key_rect(rect.cols, rect.rows, lo) or \
            any(x < lo for x in S.letters()):
        raise CatabolismError("tableau does not start with the key of the first rectangle")
    return restrict_tableau(S, hi + 1, max(S.letters(), default=hi))


def cat_step(S: Tableau, rect: Rect, mode: str, base: int = 0) -> Tableau:
    skew = remove_key(S, rect, base)
    return slice_tableau(skew, mode, rect.rows if mode == "row" else rect.cols)


@dataclass
class CatTrace:
    steps: list[tuple[str, Tableau]] = field(default_factory=list)
    verdict: bool = False

    def to_text(self) -> str:
        out = []
        for tag, t in self.steps:
            out.append(f"# {tag}")
            out.append(t.to_text() if len(t) else "(empty)")
        out.append(f"# verdict: {'catabolizable' if self.verdict else 'not catabolizable'}")
        return "\n".join(out) + "\n"

    def to_json(self) -> dict:
        return {"steps": [{"op": tag, "tableau": t.to_json()} for tag, t in self.steps],
                "verdict": self.verdict}


def is_catabolizable(S: Tableau, R: RectSeq, mode: str = "row") -> tuple[bool, CatTrace]:
    trace = CatTrace([("input", S)])
    if max(S.letters(), default=0) > R.n or S.content(R.n) != R.gamma:
        return False, trace
    base = 0
    cur = S
    for rect in R.rects:
        try:
            cur = cat_step(cur, rect, mode, base)
        except CatabolismError:
            return False, trace
        base += rect.rows
        tag = "cat" if mode == "row" else "colcat"
        trace.steps.append((f"{tag}_{rect}", cur))
    trace.verdict = len(cur) == 0
    return trace.verdict, trace


# -- multi-type -----------------------------------------------------------------

def y_k(S: Tableau, k: int, base: int = 0) -> int:
    """Largest ``j`` with ``S|[base+1, base+j]`` the key of ``(k^j)``."""
    j = 0
    while True:
        lo = base + 1
        if restrict_tableau(S, lo, base + j + 1) != key_rect(k, j + 1, lo):
            return j
        j += 1


def stable_V(S: Tableau, k: int) -> list[Tableau]:
    """``S, V_k(S), V_k^2(S), ...`` up to the first repeat."""
    seq = [S]
    for _ in range(len(S) + 1):
        nxt = V(seq[-1], k)
        if nxt == seq[-1]:
            return seq
        seq.append(nxt)
    raise AssertionError("V_k iteration did not stabilize")


def _increments(ys: list[int]) -> tuple[int, ...]:
    parts = [ys[0]] + [ys[i] - ys[i - 1] for i in range(1, len(ys))]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


@dataclass
class CTypeStat:
    parts: dict[int, Partition]
    stable: dict[int, Tableau] = field(default_factory=dict, repr=False)

    def get(self, k: int) -> Partition:
        return self.parts.get(k, ())

    def as_tuple(self, width: int | None = None) -> tuple[Partition, ...]:
        width = max(self.parts, default=0) if width is None else width
        return tuple(self.get(k) for k in range(1, width + 1))

    def __str__(self) -> str:
        return "; ".join("(" + ",".join(map(str, p)) + ")" for p in self.as_tuple())

    def is_partition_valued(self) -> bool:
        return all(all(p[i] >= p[i + 1] for i in range(len(p) - 1)) and all(x > 0 for x in p)
                   for p in self.parts.values())


def ctype(S: Tableau) -> CTypeStat:
    c = list(S.content())
    if any(c[i] < c[i + 1] for i in range(len(c) - 1)) or (c and c[-1] == 0):
        raise ValueError(f"content {tuple(c)} is not a partition")
    parts: dict[int, Partition] = {}
    stable: dict[int, Tableau] = {}
    base = 0
    cur = S
    while base < len(c):
        k = c[base]
        m = sum(1 for x in c[base:] if x == k)
        seq = stable_V(cur, k)
        parts[k] = _increments([y_k(t, k, base) for t in seq])
        stable[k] = seq[-1]
        base += m
        rest = restrict_tableau(seq[-1], base + 1, len(c))
        cur = p_tableau(row_word(rest))
    return CTypeStat(parts, stable)


def ctype_dominates(S: Tableau, R: RectSeq) -> bool:
    """``ctype(S)`` dominates ``xi(R)`` width by width."""
    if S.content(R.n) != R.gamma:
        raise ValueError("content of S differs from gamma(R)")
    ct = ctype(S)
    widths = set(ct.parts) | set(R.xi)
    return all(dominance_leq(R.xi.get(k, ()), ct.get(k)) is True for k in widths)


def ctype_equals(S: Tableau, R: RectSeq) -> bool:
    ct = ctype(S)
    widths = set(ct.parts) | set(R.xi)
    return all(R.xi.get(k, ()) == ct.get(k) for k in widths)
