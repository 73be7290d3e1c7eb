"""The rotation ``chi_R``, cocyclage and cyclage covers, and graded posets."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .charge import charge_tab, cocharge_tab
from .core import Tableau, Word, row_word
from .embed import tau_word
from .lrwords import RectSeq, all_lrt, is_lr_word
from .rsk import (column_insert, corners, p_tableau, reverse_bump, reverse_column_bump,
                  row_insert, w0_action)


class PosetError(RuntimeError):
    pass


def w0R(w: Sequence[int], R: RectSeq) -> Word:
    out = tuple(w)
    for r, (lo, hi) in zip(R.rects, R.alphabets):
        if r.rows > 1:
            out = w0_action(out, lo, hi)
    return out


def chi_R(w: Sequence[int], R: RectSeq, check: bool = True) -> Word:
    """``ux -> (w0 x)(w0 u)``."""
    if not w:
        raise ValueError("chi_R of the empty word")
    u, x = tuple(w[:-1]), w[-1]
    out = w0R((x,), R) + w0R(u, R)
    if check and not is_lr_word(out, R):
        raise AssertionError(f"chi_R left W(R): {tuple(w)} -> {out}")
    return out


def chi_R_inverse(w: Sequence[int], R: RectSeq, check: bool = True) -> Word:
    """``xu -> (w0 u)(w0 x)``."""
    if not w:
        raise ValueError("chi_R inverse of the empty word")
    x, u = w[0], tuple(w[1:])
    out = w0R(u, R) + w0R((x,), R)
    if check and not is_lr_word(out, R):
        raise AssertionError(f"chi_R inverse left W(R): {tuple(w)} -> {out}")
    return out


def cocyclage_covers(T: Tableau, R: RectSeq) -> list[tuple[Tableau, tuple[int, int]]]:
    """Tableaux ``P(chi_R(ux))`` for the corners of ``T`` east of the widest
    rectangle, northeast corner first."""
    a = max(r.cols for r in R.rects)
    out = []
    for cell in corners(T.shape):
        if cell[1] <= a:
            continue
        U, x = reverse_bump(T, cell)
        out.append((p_tableau(chi_R(row_word(U) + (x,), R)), cell))
    return out


def cyclage_covers(T: Tableau, R: RectSeq) -> list[tuple[Tableau, tuple[int, int]]]:
    """Tableaux ``P(ux)`` with ``T = P(xu)`` whose cell lies south of the
    tallest rectangle."""
    b = max(r.rows for r in R.rects)
    out = []
    for cell in corners(T.shape):
        if cell[0] <= b:
            continue
        x, U = reverse_column_bump(T, cell)
        out.append((p_tableau(chi_R_inverse((x,) + row_word(U), R)), cell))
    return out


def _orbit_words(w: Word, R: RectSeq):
    seen = {(R, w)}
    queue = deque([(R, w)])
    while queue:
        R1, w1 = queue.popleft()
        yield R1, w1
        for p in range(1, R1.t):
            if R1.rects[p - 1] == R1.rects[p]:
                continue
            state = (R1.swap(p), tau_word(w1, R1, p))
            if state not in seen:
                seen.add(state)
                queue.append(state)


def is_strong_cover(u: Sequence[int], x: int, R: RectSeq) -> bool:
    """For every reordering the last letter avoids the first subalphabet."""
    w = tuple(u) + (x,)
    if not is_lr_word(w, R):
        raise ValueError(f"{w} is not an LR word for {R}")
    return all(w1[-1] > R1.alphabets[0][1] for R1, w1 in _orbit_words(w, R))


def is_strong_cover_nested(x: int, R: RectSeq) -> bool:
    return x > R.alphabets[0][1]


def strong_covers(T: Tableau, R: RectSeq) -> list[tuple[Tableau, tuple[int, int]]]:
    out = []
    for cell in corners(T.shape):
        U, x = reverse_bump(T, cell)
        u = row_word(U)
        if is_strong_cover(u, x, R):
            out.append((p_tableau(chi_R(u + (x,), R)), cell))
    return out


def weak_cover(u: Sequence[int], x: int, mode: str, bound: int) -> bool:
    """``mode == "col"``: the cell of ``P(ux)`` outside ``P(u)`` lies east of
    column ``bound``; ``mode == "row"``: the cell of ``P(xu)`` outside
    ``P(u)`` lies south of row ``bound``."""
    U = p_tableau(tuple(u))
    if mode == "col":
        _, (i, j) = row_insert(U, x)
        return j > bound
    if mode == "row":
        _, (i, j) = column_insert(x, U)
        return i > bound
    raise ValueError(f"unknown mode {mode}")


# -- posets ---------------------------------------------------------------------

@dataclass
class GradedPoset:
    nodes: list[Tableau]
    covers: list[tuple[int, int, str]]
    grade: list[int]
    grade_name: str
    step: int = 0
    meta: dict = field(default_factory=dict)

    def edge_set(self) -> set[tuple[Tableau, Tableau]]:
        return {(self.nodes[a], self.nodes[b]) for a, b, _ in self.covers}

    def to_dot(self) -> str:
        lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
        for i, t in enumerate(self.nodes):
            label = t.to_text().replace("\n", "\\n")
            lines.append(f'  n{i} [label="{label}\\n{self.grade_name}={self.grade[i]}"];')
        for a, b, kind in self.covers:
            lines.append(f'  n{a} -> n{b} [kind="{kind}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({
            "meta": self.meta,
            "grade_name": self.grade_name,
            "step": self.step,
            "nodes": [{"id": i, "tableau": t.to_json(), "grade": self.grade[i]}
                      for i, t in enumerate(self.nodes)],
            "covers": [{"lower": a, "upper": b, "kind": k} for a, b, k in self.covers],
        }, indent=1)


def build_poset(R: RectSeq, order: str = "cocyclage", max_cells: int = 12) -> GradedPoset:
    """Nodes ``LRT(R)``; each cover ``(lower, upper)`` goes from the image of
    a move to its source.  ``step`` is the uniform grade change along covers."""
    if R.size > max_cells:
        raise PosetError(f"{R.size} cells exceeds the bound {max_cells}")
    nodes = list(all_lrt(R))
    index = {t: i for i, t in enumerate(nodes)}
    if order in ("cocyclage", "strong"):
        grade = [charge_tab(t, R) for t in nodes]
        gname = "charge"
        moves = cocyclage_covers if order == "cocyclage" else strong_covers
    elif order == "cyclage":
        grade = [cocharge_tab(t, R) for t in nodes]
        gname = "cocharge"
        moves = cyclage_covers
    else:
        raise ValueError(f"unknown order {order}")
    covers = []
    for i, t in enumerate(nodes):
        for s, _ in moves(t, R):
            covers.append((index[s], i, order))
    covers = sorted(set(covers))
    steps = {grade[b] - grade[a] for a, b, _ in covers}
    if len(steps) > 1 or steps - {1, -1}:
        raise PosetError(f"{order} on {R} is not graded by {gname}: steps {sorted(steps)}")
    return GradedPoset(nodes, covers, grade, gname, steps.pop() if steps else 0,
                       {"rects": str(R), "order": order})
