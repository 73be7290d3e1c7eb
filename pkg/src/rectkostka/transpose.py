"""The transpose bijection ``tr_R`` and generalized standardization.

``tr_R`` relabels each subalphabet into the transposed one and reverses the
word.  ``std_general`` changes the anchor tableaux of a word block by block,
keeping positions and recording tableaux.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .core import Tableau, Word, conjugate, row_word
from .lrwords import RectSeq, is_lr_word
from .rsk import evacuation, inverse_rsk, p_tableau, q_tableau, standard_tableaux

Segmentation = tuple[tuple[int, int], ...]


class TransposeError(ValueError):
    pass


def tr_word(w: Sequence[int], R: RectSeq, check: bool = True) -> Word:
    """The ``c``-th copy (from the left) of a letter of ``A_i`` becomes the
    ``c``-th smallest letter of ``A^t_i``; then the word is reversed."""
    if check and not is_lr_word(w, R):
        raise TransposeError(f"{tuple(w)} is not an LR word for {R}")
    Rt = R.transpose()
    block = {}
    for i, (lo, hi) in enumerate(R.alphabets):
        for x in range(lo, hi + 1):
            block[x] = i
    seen: dict[int, int] = {}
    out = []
    for x in w:
        c = seen.get(x, 0)
        seen[x] = c + 1
        out.append(Rt.alphabets[block[x]][0] + c)
    return tuple(reversed(out))


def tableau_from_col_word(v: Sequence[int], shape: Sequence[int]) -> Tableau:
    """The filling of ``shape`` whose column word (left to right, each column
    bottom to top) is ``v``."""
    cols = conjugate(shape)
    out_cols = []
    k = 0
    for h in cols:
        out_cols.append(list(reversed(v[k:k + h])))
        k += h
    if k != len(v):
        raise TransposeError("word length does not match the shape")
    rows = tuple(tuple(c[i] for c in out_cols if len(c) > i) for i in range(len(shape)))
    return Tableau(rows)


def tr_tab(T: Tableau, R: RectSeq) -> Tableau:
    if not T.is_straight or not is_lr_word(row_word(T), R):
        raise TransposeError("tableau is not an LR tableau for the sequence")
    t = tableau_from_col_word(tr_word(row_word(T), R), conjugate(T.shape))
    if not t.is_column_strict():
        raise AssertionError("transposed tableau is not column-strict")
    return t


# -- standardization ---------------------------------------------------------

def rowwise_tableau(shape: Sequence[int], lo: int = 1) -> Tableau:
    rows, x = [], lo
    for r in shape:
        rows.append(tuple(range(x, x + r)))
        x += r
    return Tableau(tuple(rows))


def columnwise_tableau(shape: Sequence[int], lo: int = 1) -> Tableau:
    return rowwise_tableau(conjugate(shape), lo).transpose()


def segmentation_of(sizes: Sequence[int], lo: int = 1) -> Segmentation:
    out = []
    for s in sizes:
        out.append((lo, lo + s - 1))
        lo += s
    return tuple(out)


def _block_index(seg: Segmentation) -> dict[int, int]:
    return {x: i for i, (lo, hi) in enumerate(seg) for x in range(lo, hi + 1)}


def in_anchored(w: Sequence[int], seg: Segmentation, anchors: Sequence[Tableau]) -> bool:
    """``w`` lies in ``W(R, Y)``: each block restricts to its anchor's class."""
    where = _block_index(seg)
    if any(x not in where for x in w):
        return False
    for i, (lo, hi) in enumerate(seg):
        if p_tableau(tuple(x for x in w if lo <= x <= hi)) != anchors[i]:
            return False
    return True


def std_general(w: Sequence[int], seg_from: Segmentation, anchors_from: Sequence[Tableau],
                seg_to: Segmentation, anchors_to: Sequence[Tableau]) -> Word:
    """Positions of block ``i`` kept, its insertion tableau replaced by
    ``anchors_to[i]``, its recording tableau kept."""
    if len(seg_from) != len(seg_to) or len(anchors_from) != len(anchors_to):
        raise TransposeError("segmentations of different lengths")
    if any(a.shape != b.shape for a, b in zip(anchors_from, anchors_to)):
        raise TransposeError("anchor shapes differ")
    if not in_anchored(w, seg_from, anchors_from):
        raise TransposeError(f"{tuple(w)} is not in the anchored word set")
    out = list(w)
    for (lo, hi), Z in zip(seg_from, anchors_to):
        pos = [k for k, x in enumerate(w) if lo <= x <= hi]
        q = q_tableau([w[k] for k in pos])
        for k, x in zip(pos, inverse_rsk(Z, q)):
            out[k] = x
    return tuple(out)


def _lr_anchors(R: RectSeq, kind: str) -> tuple[Segmentation, tuple[Tableau, ...]]:
    seg = segmentation_of([r.size for r in R.rects])
    make = rowwise_tableau if kind == "row" else columnwise_tableau
    return seg, tuple(make(r.partition, lo) for r, (lo, _) in zip(R.rects, seg))


def std(w: Sequence[int]) -> Word:
    """Schensted standardization: equal letters numbered left to right."""
    order = sorted(range(len(w)), key=lambda k: (w[k], k))
    out = [0] * len(w)
    for rank, k in enumerate(order, 1):
        out[k] = rank
    return tuple(out)


def std_lr(w: Sequence[int], R: RectSeq) -> Word:
    seg, anchors = _lr_anchors(R, "row")
    return std_general(w, R.alphabets, R.keys(), seg, anchors)


def cstd(w: Sequence[int], R: RectSeq) -> Word:
    seg, anchors = _lr_anchors(R, "col")
    return std_general(w, R.alphabets, R.keys(), seg, anchors)


def std_image_check(v: Sequence[int], alpha: Sequence[int]) -> bool:
    """Whether ``v == std(w)`` for some ``w`` of content ``alpha``."""
    n = len(v)
    if sorted(v) != list(range(1, n + 1)):
        raise TransposeError("standard word required")
    if sum(alpha) != n:
        return False
    cuts = set()
    s = 0
    for a in alpha:
        s += a
        cuts.add(s)
    where = {x: k for k, x in enumerate(v)}
    return all(i in cuts for i in range(1, n) if where[i + 1] < where[i])


def destandardize(v: Sequence[int], alpha: Sequence[int]) -> Word:
    """The word of content ``alpha`` whose standardization is ``v``."""
    letter = []
    for i, a in enumerate(alpha, 1):
        letter += [i] * a
    return tuple(letter[x - 1] for x in v)


# -- property checks -------------------------------------------------------------

def lr_words(R: RectSeq) -> Iterator[Word]:
    """All of ``W(R)``: interleave, block by block, the words of each key."""
    yield from anchored_words(R.alphabets, R.keys())


def anchored_words(seg: Segmentation, anchors: Sequence[Tableau]) -> Iterator[Word]:
    per_block = []
    for Y in anchors:
        per_block.append([inverse_rsk(Y, q) for q in standard_tableaux(Y.shape)])
    sizes = [len(Y) for Y in anchors]
    total = sum(sizes)

    def positions(k: int, free: list[int]):
        if k == len(sizes):
            yield []
            return
        for chosen in combinations(free, sizes[k]):
            rest = [p for p in free if p not in chosen]
            for tail in positions(k + 1, rest):
                yield [chosen] + tail

    for split in positions(0, list(range(total))):
        def fill(k: int, cur: list[int]):
            if k == len(split):
                yield tuple(cur)
                return
            for word in per_block[k]:
                for p, x in zip(split[k], word):
                    cur[p] = x
                yield from fill(k + 1, cur)

        yield from fill(0, [0] * total)


def verify_trans_props(R: RectSeq, max_cells: int = 8) -> dict:
    """(T1)-(T5) and ``rev(cstd(w)) == std(tr_R(w))`` over all of ``W(R)``;
    returns counts and the first failure."""
    if R.size > max_cells:
        raise TransposeError(f"{R.size} cells exceeds the bound {max_cells}")
    from .cyclage import chi_R, chi_R_inverse
    from .embed import tau_word
    Rt = R.transpose()
    report = {"rects": str(R), "words": 0, "failure": None}

    def fail(name, w):
        report["failure"] = {"property": name, "word": list(w)}
        return report

    for w in lr_words(R):
        report["words"] += 1
        v = tr_word(w, R)
        if not is_lr_word(v, Rt):
            return fail("image in W(R^t)", w)
        if tr_word(v, Rt) != tuple(w):
            return fail("T1", w)
        P = p_tableau(tuple(w))
        if p_tableau(v) != tr_tab(P, R):
            return fail("T4", w)
        if q_tableau(v) != evacuation(q_tableau(w)).transpose():
            return fail("T5", w)
        if tuple(reversed(cstd(w, R))) != std(v):
            return fail("rev cstd = std tr", w)
        if w and tr_word(chi_R(w, R), R) != chi_R_inverse(v, Rt):
            return fail("tr chi = chi^-1 tr", w)
        for p in range(1, R.t):
            if tr_word(tau_word(w, R, p), R.swap(p)) != tau_word(v, Rt, p):
                return fail(f"tr tau_{p} = tau_{p} tr", w)
    # (T2) and (T3) on tableau words
    from .lrwords import all_lrt
    for T in all_lrt(R):
        w = row_word(T)
        U = tr_tab(T, R)
        from .core import col_word
        if col_word(U) != tr_word(w, R):
            return fail("T2", w)
    return report
