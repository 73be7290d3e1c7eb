"""Elementary embeddings between LR tableaux and their composites.

``tau_p`` swaps two adjacent rectangles, ``iota`` moves one row of a
width-``k`` pair from the first rectangle to the second.  Both act on the
letters of ``A_p | A_{p+1}`` only and keep the recording tableau of that
restriction, which is how they are computed on words.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Sequence

from .core import Tableau, Word, row_word
from .lrwords import (ChainError, ElementaryStep, Rect, RectSeq, all_lrt, apply_step,
                      chain_between, dominant_sequences, is_lr_word, pseudo_geq, unique_lrt)
from .rsk import inverse_rsk, p_tableau, rsk


class EmbeddingError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def _two_rect_target(shape: tuple[int, ...], r1: Rect, r2: Rect) -> Tableau:
    t = unique_lrt(shape, RectSeq((r1, r2)))
    if t is None:
        raise EmbeddingError(f"no LR tableau of shape {shape} for ({r1},{r2})")
    return t


def _replace_block(w: Sequence[int], lo: int, hi: int, target: tuple[Rect, Rect]) -> Word:
    """Swap the P-tableau of ``w|[lo,hi]`` for the same-shape LR tableau of
    ``target`` (in the same letters), keeping its recording tableau."""
    pos = [k for k, x in enumerate(w) if lo <= x <= hi]
    sub = [w[k] - lo + 1 for k in pos]
    pair = rsk(sub)
    new_p = _two_rect_target(pair.p.shape, *target)
    new_sub = inverse_rsk(new_p, pair.q)
    out = list(w)
    for k, x in zip(pos, new_sub):
        out[k] = x + lo - 1
    return tuple(out)


def tau_word(w: Sequence[int], R: RectSeq, p: int) -> Word:
    """Exchange rectangles ``p`` and ``p + 1`` (1-based)."""
    if not 1 <= p < R.t:
        raise ValueError(f"position {p} out of range for {R}")
    a, b = R.rects[p - 1], R.rects[p]
    if a == b:
        return tuple(w)
    lo = R.alphabets[p - 1][0]
    hi = R.alphabets[p][1]
    return _replace_block(w, lo, hi, (b, a))


def tau_tab(T: Tableau, R: RectSeq, p: int) -> Tableau:
    return p_tableau(tau_word(row_word(T), R, p))


def e1_word(w: Sequence[int], R: RectSeq, step: ElementaryStep) -> Word:
    p = step.position
    if p != 1:
        raise ChainError("E1 acts on the first two rectangles only")
    k, a, b = step.k, step.a, step.b
    lo = R.alphabets[p - 1][0]
    hi = R.alphabets[p][1] if b else R.alphabets[p - 1][1]
    return _replace_block(w, lo, hi, (Rect(a - 1, k), Rect(b + 1, k)))


def iota(T: Tableau, k: int, eta1: int, eta2: int) -> Tableau:
    """The same-shape LR tableau for ``((k^(eta1-1)), (k^(eta2+1)))``."""
    if eta1 - 1 < eta2 + 1:
        raise ValueError("iota needs eta1 - 1 >= eta2 + 1")
    R = RectSeq(((eta1, k), (eta2, k))) if eta2 else RectSeq(((eta1, k),))
    if not (T.is_straight and is_lr_word(row_word(T), R)):
        raise ValueError("input is not an LR tableau for the pair")
    return _two_rect_target(T.shape, Rect(eta1 - 1, k), Rect(eta2 + 1, k))


def step_word(w: Sequence[int], R: RectSeq, step: ElementaryStep) -> tuple[Word, RectSeq]:
    if step.kind == "E2":
        return tau_word(w, R, step.position), apply_step(R, step)
    return e1_word(w, R, step), apply_step(R, step)


def theta_word(w: Sequence[int], R: RectSeq, S: RectSeq,
               chain: Sequence[ElementaryStep] | None = None) -> Word:
    if chain is None:
        chain = chain_between(R, S)
    if not is_lr_word(w, R):
        raise ValueError(f"{w} is not an LR word for {R}")
    w = tuple(w)
    for step in chain:
        w, R = step_word(w, R, step)
    if R != S:
        raise ChainError("chain does not end at the target sequence")
    return w


def theta_tab(T: Tableau, R: RectSeq, S: RectSeq,
              chain: Sequence[ElementaryStep] | None = None) -> Tableau:
    return p_tableau(theta_word(row_word(T), R, S, chain))


@lru_cache(maxsize=None)
def theta_map(R: RectSeq, S: RectSeq) -> dict[Tableau, Tableau]:
    """``theta`` on all of ``LRT(R)`` along the default chain."""
    chain = chain_between(R, S)
    return {T: theta_tab(T, R, S, chain) for T in all_lrt(R)}


def theta_map_random(R: RectSeq, S: RectSeq, seed: int) -> dict[Tableau, Tableau]:
    chain = chain_between(R, S, random.Random(seed))
    return {T: theta_tab(T, R, S, chain) for T in all_lrt(R)}


def theta_rows(T: Tableau, R: RectSeq) -> Tableau:
    """``theta_R``: embed into column-strict tableaux of content ``gamma(R)``."""
    return theta_map(R, R.rows_seq())[T]


@lru_cache(maxsize=None)
def theta_image(R: RectSeq) -> frozenset[Tableau]:
    return frozenset(theta_map(R, R.rows_seq()).values())


# -- image membership and multi-atoms -------------------------------------

def _width_block_order(R: RectSeq, k: int) -> list[int]:
    """Letters of ``[n]`` with the width-``k`` subalphabets first (in order),
    the rest after; the minimal-length permutation doing so."""
    first, rest = [], []
    for r, (lo, hi) in zip(R.rects, R.alphabets):
        (first if r.cols == k else rest).extend(range(lo, hi + 1))
    return first + rest


def theta_image_contains(S: Tableau, R: RectSeq) -> bool:
    """Whether ``S`` lies in the image of ``theta_R``.

    Width class by width class: move the width-``k`` letters to an initial
    interval by crystal reflections, restrict, and compare the catabolism
    multi-type with the heights of the width-``k`` rectangles.
    """
    from .catabolism import ctype
    from .core import restrict_word
    from .rsk import permute_letters

    if S.content(R.n) != R.gamma:
        raise ValueError(f"content {S.content(R.n)} differs from {R.gamma}")
    w = row_word(S)
    for k, heights in R.xi.items():
        order = _width_block_order(R, k)
        v = permute_letters(w, order)
        m = sum(heights)
        piece = p_tableau(restrict_word(v, 1, m))
        got = ctype(piece).get(k)
        # dominance on the single width class present in the restriction
        from .core import dominance_leq
        if dominance_leq(heights, got) is not True:
            return False
    return True


def matom(R: RectSeq) -> frozenset[Tableau]:
    """``Im theta_R`` minus the images of the strictly more dominant sequences
    with the same ``gamma`` (those images are contained in ``Im theta_R``).
    ``R`` is taken in dominant form."""
    R = R.canonical()
    gamma = tuple(sorted(R.gamma, reverse=True))
    own = theta_image(R)
    for R2 in dominant_sequences(gamma):
        if R2 != R and pseudo_geq(R2, R) and not pseudo_geq(R, R2):
            own = own - theta_image(R2)
    return own


def matoms(gamma: Sequence[int]) -> dict[RectSeq, frozenset[Tableau]]:
    return {R: matom(R) for R in dominant_sequences(tuple(gamma))}
