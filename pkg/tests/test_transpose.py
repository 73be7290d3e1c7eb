import random
from itertools import permutations

import pytest

from rectkostka.charge import charge_tab, cocharge_tab
from rectkostka.core import conjugate, row_word, tableau
from rectkostka.lrwords import RectSeq, all_lrt, sequences_up_to
from rectkostka.rsk import evacuation, p_tableau, q_tableau
from rectkostka.transpose import (TransposeError, cstd, destandardize, lr_words, rowwise_tableau,
                                  segmentation_of, std, std_general, std_image_check, std_lr, tr_tab,
                                  tr_word, verify_trans_props)
from rectkostka.verify import _anchor_lemma_case

R = RectSeq.of((2, 3), (2, 3), (3, 2))
T = tableau([[1, 1, 1, 3, 3, 5], [2, 2, 2, 4, 5, 6], [3, 4, 6], [4, 7, 7]])
T_T = tableau([[1, 1, 4, 4], [2, 2, 5, 7], [3, 3, 7, 8], [5, 6], [6, 7], [8, 8]])


def test_transpose_example():
    assert R.transpose() == RectSeq.of((3, 2), (3, 2), (2, 3))
    assert R.transpose().alphabets == ((1, 3), (4, 6), (7, 8))
    assert tr_tab(T, R) == T_T
    assert T_T.shape == conjugate(T.shape) == (4, 4, 4, 2, 2, 2)
    w = row_word(T)
    assert p_tableau(tr_word(w, R)) == T_T
    assert q_tableau(tr_word(w, R)) == evacuation(q_tableau(w)).transpose()
    assert tr_word(tr_word(w, R), R.transpose()) == w


def test_single_rectangle_keys():
    for Rk in [RectSeq.of((2, 3)), RectSeq.of((3, 1)), RectSeq.of((1, 4))]:
        assert tr_tab(Rk.keys()[0], Rk) == Rk.transpose().keys()[0]


def test_singletons_reverse():
    Rs = RectSeq.of((1, 1), (1, 1), (1, 1))
    for w in lr_words(Rs):
        assert tr_word(w, Rs) == tuple(reversed(w))


def test_rejects_non_lr():
    with pytest.raises(TransposeError):
        tr_word((1, 2), RectSeq.of((2, 1)))


def test_charge_transposes():
    for Rx in sequences_up_to(7, 3):
        for U in all_lrt(Rx):
            assert charge_tab(U, Rx) == cocharge_tab(tr_tab(U, Rx), Rx.transpose())


def test_trans_props_catalog():
    for Rx in sequences_up_to(6, 3):
        rep = verify_trans_props(Rx, max_cells=6)
        assert rep["failure"] is None, rep


def test_kostka_21_props():
    rep = verify_trans_props(RectSeq.of((1, 2), (1, 1)))
    assert rep["failure"] is None and rep["words"] == 3


def test_std_examples():
    assert std((1, 1, 2)) == (1, 2, 3)
    assert std((2, 1, 1)) == (3, 1, 2)
    assert not std_image_check((2, 1, 3), (2, 1))
    # image of std over content (2,1) is {123, 132, 312}
    assert std_image_check((3, 1, 2), (2, 1))
    assert not std_image_check((2, 3, 1), (2, 1))
    assert destandardize((1, 3, 2), (2, 1)) == (1, 2, 1)


def test_std_image_enumeration():
    alpha = (2, 1, 2)
    image = {std(w) for w in set(permutations((1, 1, 2, 3, 3)))}
    for v in permutations(range(1, 6)):
        assert std_image_check(v, alpha) == (v in image)


def test_rowwise_anchor_is_schensted():
    for Rx in sequences_up_to(5, 3):
        for w in lr_words(Rx):
            assert std_lr(w, Rx) == std(w)


def test_identity_anchor_change():
    Rx = RectSeq.of((2, 2), (1, 1))
    for w in lr_words(Rx):
        assert std_general(w, Rx.alphabets, Rx.keys(), Rx.alphabets, Rx.keys()) == w


def test_cstd_reverse():
    for Rx in sequences_up_to(6, 3):
        for w in lr_words(Rx):
            assert tuple(reversed(cstd(w, Rx))) == std(tr_word(w, Rx))


def test_rowwise_tableau():
    assert rowwise_tableau((2, 1)) == tableau([[1, 2], [3]])
    assert segmentation_of([2, 3]) == ((1, 2), (3, 5))


def test_anchor_lemma_random():
    rng = random.Random(7)
    for _ in range(60):
        assert _anchor_lemma_case(rng, 6) is None
