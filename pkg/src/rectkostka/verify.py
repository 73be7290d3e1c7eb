"""Exhaustive verification suites over desk-scale catalogs.

Each suite returns a :class:`SuiteResult`; a failing suite carries the first
counterexample as a JSON-ready dict whose tableaux use the core JSON format.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable

from .catabolism import ctype, ctype_dominates, ctype_equals, is_catabolizable
from .charge import charge_R, charge_tab, cocharge_R, cocharge_tab, ls_charge, n_stat
from .core import Tableau, conjugate, partitions_of, row_word
from .cyclage import build_poset, chi_R, is_strong_cover
from .embed import (matom, theta_image, theta_image_contains, theta_map, theta_map_random)
from .lrwords import (RectSeq, all_lrt, column_strict_fillings, dominant_sequences, pseudo_geq,
                      sequences_up_to)
from .poly import (QPoly, kostka_consistency, kostka_foulkes, kostka_polys, lr_product,
                   verify_duality, verify_monotonicity)
from .rsk import p_tableau, q_tableau, reverse_bump
from .transpose import (anchored_words, lr_words, destandardize, std,
                        std_general, std_image_check, tr_tab, verify_trans_props)

DEFAULT_MAX_CELLS = 8
HARD_MAX_CELLS = 12


@dataclass
class SuiteResult:
    name: str
    ok: bool = True
    checked: int = 0
    counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, **info) -> "SuiteResult":
        self.ok = False
        if self.counterexample is None:
            self.counterexample = info
        return self

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}\t{self.name}\tchecked={self.checked}\t{self.seconds:.1f}s"

    def to_json(self) -> dict:
        return {"suite": self.name, "ok": self.ok, "checked": self.checked,
                "seconds": round(self.seconds, 3), "notes": self.notes,
                "counterexample": self.counterexample}


def _tab(t: Tableau) -> dict:
    return t.to_json()


# -- catalogs ------------------------------------------------------------------

def catalog(max_cells: int, max_rects: int = 3) -> list[RectSeq]:
    return sequences_up_to(max_cells, max_rects)


def dominant_catalog(max_cells: int, max_rects: int = 3) -> list[RectSeq]:
    return [R for R in catalog(max_cells, max_rects) if R.canonical() == R]


def nested_catalog(max_cells: int, max_rects: int = 3) -> list[RectSeq]:
    return [R for R in catalog(max_cells, max_rects) if R.is_nested()]


def comparable_pairs(max_cells: int, max_rects: int = 3) -> list[tuple[RectSeq, RectSeq]]:
    """``(R, S)`` with ``R`` any catalog sequence and ``S`` a dominant
    sequence below it, plus ``S`` in reversed order."""
    out = []
    for R in catalog(max_cells, max_rects):
        gamma = tuple(sorted(R.gamma, reverse=True))
        targets = set()
        for D in dominant_sequences(gamma):
            if pseudo_geq(R, D):
                targets.add(D)
                targets.add(RectSeq(tuple(reversed(D.rects))))
        out.extend((R, S) for S in sorted(targets, key=str))
    return out


def cst(gamma) -> list[Tableau]:
    gamma = tuple(gamma)
    n = len(gamma)
    return [T for lam in partitions_of(sum(gamma), max_len=n) for T in column_strict_fillings(lam, gamma)]


# -- suites --------------------------------------------------------------------

def suite_charge_comp(max_cells: int) -> SuiteResult:
    """``charge_R + cocharge_R = n(R)`` on every word of ``W(R)``."""
    res = SuiteResult("charge-comp")
    for R in catalog(max_cells):
        n = n_stat(R)
        seen: dict[Tableau, int] = {}
        for w in lr_words(R):
            res.checked += 1
            P = p_tableau(w)
            c = charge_R(w, R)
            if c + cocharge_R(w, R) != n or not 0 <= c <= n:
                return res.fail(rects=str(R), word=list(w), n=n)
            if seen.setdefault(P, c) != c:
                return res.fail(rects=str(R), word=list(w), reason="charge not constant on Knuth class")
    return res


def _covers_match(R, S, m) -> bool:
    PR, PS = build_poset(R), build_poset(S)
    image = set(m.values())
    mapped = {(m[a], m[b]) for a, b in PR.edge_set()}
    full = {(a, b) for a, b in PS.edge_set() if a in image and b in image}
    return mapped == full


def suite_embedding(max_cells: int, seeds: int = 2) -> SuiteResult:
    """Chain independence, injectivity, shape and charge, covers, functoriality."""
    res = SuiteResult("embedding-thm")
    for R, S in comparable_pairs(max_cells):
        res.checked += 1
        m = theta_map(R, S)
        for seed in range(seeds):
            if theta_map_random(R, S, seed) != m:
                return res.fail(rects=str(R), target=str(S), reason="chain dependence", seed=seed)
        if len(set(m.values())) != len(m):
            return res.fail(rects=str(R), target=str(S), reason="not injective")
        for T, U in m.items():
            if T.shape != U.shape or charge_tab(T, R) != charge_tab(U, S):
                return res.fail(rects=str(R), target=str(S), reason="shape or charge",
                                tableau=_tab(T), image=_tab(U))
        if not _covers_match(R, S, m):
            return res.fail(rects=str(R), target=str(S), reason="covers")
        # theta_R = theta_S o theta_R^S, through the rows of S
        rows = S.rows_seq()
        full, second = theta_map(R, rows), theta_map(S, rows)
        if any(full[T] != second[U] for T, U in m.items()):
            return res.fail(rects=str(R), target=str(S), reason="functoriality")
    return res


def suite_monotonicity(max_cells: int) -> SuiteResult:
    res = SuiteResult("monotonicity")
    for R in dominant_catalog(max_cells):
        for S in dominant_sequences(R.gamma):
            if S == R or not pseudo_geq(R, S):
                continue
            res.checked += 1
            rep = verify_monotonicity(R, S)
            if not rep["ok"]:
                bad = next(r for r in rep["shapes"] if not (r["leq"] and r["witnessed"]))
                return res.fail(rects=str(R), target=str(S), shape=list(bad["shape"]),
                                K_R=bad["K_R"].to_json(), K_S=bad["K_S"].to_json())
    return res


def suite_embed_image(max_cells: int) -> SuiteResult:
    """Image of ``theta_R`` against catabolism, column catabolism, multi-type
    dominance and the width-class test; multi-atoms for nested ``R``."""
    res = SuiteResult("embed-image")
    for R in catalog(max_cells):
        nested = R.is_nested()
        if not (nested or R.canonical() == R):
            continue
        image = theta_image(R)
        for S in cst(R.gamma):
            res.checked += 1
            inside = S in image
            if theta_image_contains(S, R) != inside:
                return res.fail(rects=str(R), tableau=_tab(S), reason="width-class test")
            if nested:
                verdicts = (is_catabolizable(S, R, "row")[0], is_catabolizable(S, R, "col")[0],
                            ctype_dominates(S, R))
                if any(v != inside for v in verdicts):
                    return res.fail(rects=str(R), tableau=_tab(S), image=inside,
                                    cat=verdicts[0], colcat=verdicts[1], ctype=verdicts[2])
        if nested and R.canonical() == R:
            want = {S for S in cst(R.gamma) if ctype_equals(S, R)}
            if matom(R) != want:
                return res.fail(rects=str(R), reason="multi-atom")
    return res


def suite_atom_thm(max_cells: int) -> SuiteResult:
    res = SuiteResult("atom-thm")
    for R in nested_catalog(max_cells):
        if R.canonical() != R:
            continue
        res.checked += 1
        want = {S for S in cst(R.gamma) if ctype_equals(S, R)}
        got = matom(R)
        if got != want:
            extra = sorted(got ^ want, key=lambda t: t.rows)[0]
            return res.fail(rects=str(R), tableau=_tab(extra), in_matom=extra in got)
    return res


def suite_poset_transpose(max_cells: int) -> SuiteResult:
    """``tr_R``: cocyclage on ``LRT(R)`` to cyclage on ``LRT(R^t)``."""
    res = SuiteResult("poset-transpose")
    for R in catalog(max_cells):
        res.checked += 1
        Rt = R.transpose()
        co, cy = build_poset(R, "cocyclage"), build_poset(Rt, "cyclage")
        tr = {T: tr_tab(T, R) for T in co.nodes}
        if sorted(tr.values(), key=lambda t: t.rows) != sorted(cy.nodes, key=lambda t: t.rows):
            return res.fail(rects=str(R), reason="not a bijection")
        for T, U in tr.items():
            if U.shape != conjugate(T.shape) or charge_tab(T, R) != cocharge_tab(U, Rt):
                return res.fail(rects=str(R), tableau=_tab(T), reason="shape or grading")
        if {(tr[a], tr[b]) for a, b in co.edge_set()} != cy.edge_set():
            return res.fail(rects=str(R), reason="covers")
    return res


def suite_poly_transpose(max_cells: int) -> SuiteResult:
    res = SuiteResult("poly-transpose")
    for R in dominant_catalog(max_cells):
        res.checked += 1
        rep = verify_duality(R)
        if not rep["ok"]:
            return res.fail(rects=str(R), n=rep["n"])
    return res


def suite_kostka(max_cells: int) -> SuiteResult:
    """Kostka-Foulkes against ``rows(mu)`` and the columns of ``mu``, and the
    cyclage standardization ``tr o theta o tr``."""
    res = SuiteResult("kostka")
    limit = min(max_cells, 7)
    for size in range(1, limit + 1):
        for mu in partitions_of(size):
            res.checked += 1
            rep = kostka_consistency(mu)
            if not rep["ok"]:
                return res.fail(mu=list(mu))
            rows = RectSeq(tuple((1, m) for m in mu))
            cols = rows.transpose()
            n = size
            for T in all_lrt(rows):
                U = tr_tab(T, rows)
                V = theta_map(cols, cols.rows_seq())[U]
                W = tr_tab(V, cols.rows_seq())
                if not W.is_standard():
                    return res.fail(mu=list(mu), tableau=_tab(T), reason="not standard")
                co_t = charge_tab(T, rows)
                # cocharge(T) = cocharge(W), with cocharge = n(content) - charge
                if n_stat(rows) - co_t != n_stat(RectSeq(((1, 1),) * n)) - ls_charge(row_word(W)):
                    return res.fail(mu=list(mu), tableau=_tab(T), reason="cocharge")
    if kostka_foulkes((2, 1), (1, 1, 1)) != QPoly({1: 1, 2: 1}):
        res.fail(reason="K~_{(2,1),(1^3)}")
    return res


def suite_lr_oracle(max_cells: int) -> SuiteResult:
    res = SuiteResult("lr-oracle")
    for R in catalog(max_cells):
        res.checked += 1
        K = {lam: k(1) for lam, k in kostka_polys(R).items()}
        L = {lam: c for lam, c in lr_product(R).items() if c}
        if K != L:
            lam = sorted(set(K) ^ set(L) or {x for x in K if K[x] != L.get(x)})[0]
            return res.fail(rects=str(R), shape=list(lam), K1=K.get(lam, 0), lr=L.get(lam, 0))
    return res


def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def suite_std_props(max_cells: int) -> SuiteResult:
    """Standardization image test, (T1)-(T5) and the anchor lemma."""
    res = SuiteResult("std-props")
    limit = min(max_cells, 6)
    for size in range(1, limit + 1):
        for alpha in _compositions(size):
            image = set()
            letters = [i for i, a in enumerate(alpha, 1) for _ in range(a)]
            for w in set(permutations(letters)):
                image.add(std(w))
            for v in permutations(range(1, size + 1)):
                res.checked += 1
                if std_image_check(v, alpha) != (v in image):
                    return res.fail(word=list(v), content=list(alpha), reason="std image")
                if v in image and std(destandardize(v, alpha)) != v:
                    return res.fail(word=list(v), content=list(alpha), reason="destandardize")
    for R in catalog(max_cells):
        rep = verify_trans_props(R, max_cells=max_cells)
        res.checked += rep["words"]
        if rep["failure"]:
            return res.fail(rects=str(R), **rep["failure"])
    rng = random.Random(0)
    for _ in range(40):
        out = _anchor_lemma_case(rng, min(max_cells, 6))
        res.checked += 1
        if out:
            return res.fail(**out)
    return res


def _random_tableau(shape, lo: int, hi: int, rng: random.Random) -> Tableau:
    choices = [T for T in column_strict_fillings_in(shape, lo, hi)]
    return rng.choice(choices)


def column_strict_fillings_in(shape, lo: int, hi: int):
    """Column-strict tableaux of ``shape`` with letters in ``[lo, hi]``."""
    size = sum(shape)
    m = hi - lo + 1
    for cont in product(range(size + 1), repeat=m):
        if sum(cont) == size:
            for T in column_strict_fillings(shape, cont):
                yield T.shift(lo - 1)


def _anchor_lemma_case(rng: random.Random, max_cells: int) -> dict | None:
    """One random instance of the anchor-change lemma: tableau words, Knuth
    classes, ``P`` and ``Q`` behave as stated."""
    shapes = [(1,), (2,), (1, 1), (2, 1), (3,), (2, 2), (1, 1, 1)]
    blocks = []
    cells = 0
    while True:
        sh = rng.choice(shapes)
        if cells + sum(sh) > max_cells or len(blocks) == 3:
            break
        blocks.append(sh)
        cells += sum(sh)
    if not blocks:
        blocks = [(1,)]
    seg_a, seg_b, Ys, Zs = [], [], [], []
    lo_a = lo_b = 1
    for sh in blocks:
        wa = len(sh) + rng.randint(0, 1)
        wb = len(sh) + rng.randint(0, 1)
        seg_a.append((lo_a, lo_a + wa - 1))
        seg_b.append((lo_b, lo_b + wb - 1))
        Ys.append(_random_tableau(sh, lo_a, lo_a + wa - 1, rng))
        Zs.append(_random_tableau(sh, lo_b, lo_b + wb - 1, rng))
        lo_a += wa
        lo_b += wb
    seg_a, seg_b = tuple(seg_a), tuple(seg_b)
    classes: dict[Tableau, Tableau] = {}
    for w in anchored_words(seg_a, Ys):
        v = std_general(w, seg_a, Ys, seg_b, Zs)
        if q_tableau(v) != q_tableau(w):
            return {"reason": "Q", "word": list(w)}
        P, Pv = p_tableau(w), p_tableau(v)
        if classes.setdefault(P, Pv) != Pv:
            return {"reason": "Knuth class", "word": list(w)}
        Pw = row_word(P)
        if std_general(Pw, seg_a, Ys, seg_b, Zs) != row_word(Pv):
            return {"reason": "P commutation", "word": list(w)}
        if (w == row_word(P)) != (v == row_word(Pv)):
            return {"reason": "tableau word", "word": list(w)}
    return None


def suite_atom_conjecture(max_cells: int) -> SuiteResult:
    """For every partition ``gamma`` of size at most ``max_cells`` and every
    dominant ``R`` with ``gamma(R) = gamma``: ``matom(R)`` equals the tableaux
    of multi-type ``xi(R)``, multi-atoms partition ``CST(gamma)``, and
    ``K_{lambda;R}`` is the charge sum over multi-type dominance."""
    res = SuiteResult("atom-conjecture")
    for size in range(1, max_cells + 1):
        for gamma in partitions_of(size):
            tabs = cst(gamma)
            types = {S: ctype(S) for S in tabs}
            covered: dict[Tableau, RectSeq] = {}
            for R in dominant_sequences(gamma):
                res.checked += 1
                atom = matom(R)
                want = {S for S in tabs if ctype_equals(S, R)}
                if atom != want:
                    S = sorted(atom ^ want, key=lambda t: t.rows)[0]
                    return res.fail(rects=str(R), tableau=_tab(S), in_matom=S in atom,
                                    ctype=str(types[S]))
                for S in atom:
                    if S in covered:
                        return res.fail(rects=str(R), other=str(covered[S]), tableau=_tab(S),
                                        reason="multi-atoms overlap")
                    covered[S] = R
                K = kostka_polys(R)
                sums: dict = {}
                for S in tabs:
                    if ctype_dominates(S, R):
                        sums.setdefault(S.shape, []).append(ls_charge(row_word(S)))
                if {lam: QPoly.from_degrees(v) for lam, v in sums.items()} != K:
                    return res.fail(rects=str(R), reason="charge sum")
            if len(covered) != len(tabs):
                return res.fail(gamma=list(gamma), reason="multi-atoms do not cover CST")
    return res


def suite_strong(max_cells: int) -> SuiteResult:
    """Strong covers: orbit test against the charge step and, for nested
    sequences, against the first-subalphabet test."""
    res = SuiteResult("strong-cocyclage")
    for R in catalog(max_cells):
        for T in all_lrt(R):
            c = charge_tab(T, R)
            from .rsk import corners
            for cell in corners(T.shape):
                res.checked += 1
                U, x = reverse_bump(T, cell)
                u = row_word(U)
                strong = is_strong_cover(u, x, R)
                S = p_tableau(chi_R(u + (x,), R))
                step = charge_tab(S, R) == c - 1
                if strong and not step:
                    return res.fail(rects=str(R), tableau=_tab(T), cell=list(cell), reason="charge step")
                if R.is_nested() and strong != (x > R.alphabets[0][1]):
                    return res.fail(rects=str(R), tableau=_tab(T), cell=list(cell), reason="nested test")
    return res


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "charge-comp": suite_charge_comp,
    "embedding-thm": suite_embedding,
    "embed-image": suite_embed_image,
    "poset-transpose": suite_poset_transpose,
    "poly-transpose": suite_poly_transpose,
    "atom-thm": suite_atom_thm,
    "std-props": suite_std_props,
    "atom-conjecture": suite_atom_conjecture,
    "monotonicity": suite_monotonicity,
    "kostka": suite_kostka,
    "lr-oracle": suite_lr_oracle,
    "strong-cocyclage": suite_strong,
}


def run_suite(name: str, max_cells: int = DEFAULT_MAX_CELLS) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name}; choose from {', '.join(SUITES)}")
    if max_cells > HARD_MAX_CELLS:
        raise ValueError(f"--max-cells is capped at {HARD_MAX_CELLS}")
    start = time.perf_counter()
    res = SUITES[name](max_cells)
    res.seconds = time.perf_counter() - start
    return res
