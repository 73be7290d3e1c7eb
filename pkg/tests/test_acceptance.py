"""The ten acceptance criteria, each at exact tolerance.

Each test appends one ``PASS/FAIL criterion N: ...`` line, printed in the
terminal summary (and directly when this file is run as a script).
"""

import json
import time

import pytest

from rectkostka.catabolism import cat_step, ctype, is_catabolizable, stable_V
from rectkostka.core import Tableau, conjugate, parse_tableau_text, row_word, tableau
from rectkostka.embed import iota
from rectkostka.lrwords import Rect, RectSeq, enumerate_lrt, key_rect
from rectkostka.poly import QPoly, kostka_foulkes
from rectkostka.rsk import knuth_equivalent
from rectkostka.transpose import tr_tab
from rectkostka.verify import run_suite

from conftest import ACCEPTANCE_LINES

MAX_CELLS = 8


def record(n: int, ok: bool, what: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {what}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def suites(n: int, what: str, *names: str):
    results = [run_suite(name, MAX_CELLS) for name in names]
    ok = all(r.ok for r in results)
    detail = ", ".join(f"{r.name} {r.checked} checked" for r in results)
    record(n, ok, f"{what} ({detail})")
    for r in results:
        assert r.ok, json.dumps(r.to_json())
    return results


def golden_checks() -> list[str]:
    bad = []
    T = tableau([[1, 1, 1, 5, 5], [2, 2, 2, 6], [3, 3, 3], [4, 4, 4], [5, 6], [6]])
    T2 = tableau([[1, 1, 1, 4, 4], [2, 2, 2, 5], [3, 3, 3], [4, 5, 6], [5, 6], [6]])
    if enumerate_lrt((5, 4, 3, 3, 2, 1), RectSeq.of((4, 3), (2, 3))) != (T,):
        bad.append("iota golden T")
    if iota(T, 3, 4, 2) != T2 or T2.shape != T.shape:
        bad.append("iota golden T'")

    S = parse_tableau_text("1 1 1 3 4 5\n2 2 2 4 5 6\n3 3 6\n4 7 7\n")
    R = RectSeq.of((2, 3), (2, 3), (3, 2))
    cat1 = tableau([[3, 3, 3, 6, 7], [4, 4, 4, 7], [5, 5], [6]])
    Y3 = key_rect(2, 3, 5)
    if cat_step(S, Rect(2, 3), "row") != cat1 or cat_step(S, Rect(2, 3), "col") != cat1:
        bad.append("cat/colcat of S")
    second = cat_step(cat1, Rect(2, 3), "col", 2)
    displayed = Tableau(((5, 5), (6,), (6, 7), (7,)), (2, 2))
    if not (knuth_equivalent(row_word(second), row_word(Y3))
            and knuth_equivalent(row_word(displayed), row_word(Y3))):
        bad.append("Y_3 Knuth equivalence")
    if not (is_catabolizable(S, R, "row")[0] and is_catabolizable(S, R, "col")[0]):
        bad.append("S catabolizable")

    V3 = tableau([[1, 1, 1, 6, 7], [2, 2, 2, 7], [3, 3, 3], [4, 4, 4], [5, 5], [6]])
    V3_2 = tableau([[1, 1, 1], [2, 2, 2], [3, 3, 3], [4, 4, 4], [5, 5], [6, 6], [7, 7]])
    ct = ctype(S)
    if stable_V(S, 3) != [S, V3, V3_2]:
        bad.append("V_3 iterates")
    if ct.stable[2] != Y3:
        bad.append("S-hat")
    if ct.as_tuple() != ((), (3,), (2, 2)) or str(ct) != "(); (3); (2,2)":
        bad.append("ctype")

    Tt = tableau([[1, 1, 1, 3, 3, 5], [2, 2, 2, 4, 5, 6], [3, 4, 6], [4, 7, 7]])
    Tt_image = tableau([[1, 1, 4, 4], [2, 2, 5, 7], [3, 3, 7, 8], [5, 6], [6, 7], [8, 8]])
    if tr_tab(Tt, R) != Tt_image or Tt_image.shape != conjugate(Tt.shape):
        bad.append("transpose example")
    return bad


def test_criterion_1_golden_examples():
    start = time.perf_counter()
    bad = golden_checks()
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1.0
    record(1, ok, f"golden examples bit-exact in {elapsed:.2f}s" + (f"; mismatches {bad}" if bad else ""))
    assert not bad
    assert elapsed < 1.0


def test_criterion_2_charge_complement():
    suites(2, "charge_R + cocharge_R = n(R) on W(R), <= 3 rectangles, <= 8 cells", "charge-comp")


def test_criterion_3_embedding_theorem():
    suites(3, "chain independence, injective, shape/charge, covers and full subposet", "embedding-thm")


def test_criterion_4_monotonicity():
    suites(4, "K_{lambda;R} <= K_{lambda;R'} witnessed by theta", "monotonicity")


def test_criterion_5_image_and_atoms():
    suites(5, "Im theta_R = cat = colcat = ctype dominance; matom = ctype equality", "embed-image", "atom-thm")


def test_criterion_6_transpose():
    suites(6, "tr_R grade-complementing poset isomorphism; polynomial duality",
           "poset-transpose", "poly-transpose")


def test_criterion_7_kostka():
    res = suites(7, "Kostka-Foulkes consistency |mu| <= 7 and K~_{(2,1),(1^3)} = q + q^2", "kostka")
    assert kostka_foulkes((2, 1), (1, 1, 1)) == QPoly({1: 1, 2: 1})
    assert res[0].ok


def test_criterion_8_lr_oracle():
    suites(8, "K(1) equals iterated LR multiplicity on the catalog", "lr-oracle")


def test_criterion_9_standardization():
    suites(9, "std image, (T1)-(T5), rev cstd = std tr, anchor lemma", "std-props")


def test_criterion_10_atom_conjecture():
    res = run_suite("atom-conjecture", MAX_CELLS)
    definitive = res.ok or (res.counterexample is not None and json.loads(json.dumps(res.counterexample)))
    verdict = "PASS" if res.ok else f"counterexample {json.dumps(res.counterexample, sort_keys=True)}"
    record(10, bool(definitive), f"atom conjecture checker over gamma of size <= {MAX_CELLS}: "
                                 f"{verdict} ({res.checked} sequences)")
    assert definitive


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
