import random

import pytest

from rectkostka.core import row_word, tableau
from rectkostka.lrwords import (ChainError, ElementaryStep, Rect, RectSeq, RectSpecError, all_lrt,
                                apply_step, chain_between, dominant_sequences, enumerate_lrt,
                                is_lr_word, key_rect, pseudo_geq, replay, sequences_up_to)

T_IOTA = tableau([[1, 1, 1, 5, 5], [2, 2, 2, 6], [3, 3, 3], [4, 4, 4], [5, 6], [6]])
R_SEC3 = RectSeq.of((2, 3), (2, 3), (3, 2))


def test_parse_and_str():
    R = RectSeq.parse("4x3, 2x3")
    assert R.rects == (Rect(4, 3), Rect(2, 3))
    assert str(R) == "4x3,2x3"
    with pytest.raises(RectSpecError):
        RectSeq.parse("4y3")
    with pytest.raises(RectSpecError):
        RectSeq.parse("0x3")


def test_sequence_invariants():
    R = R_SEC3
    assert R.gamma == (3, 3, 3, 3, 2, 2, 2)
    assert R.alphabets == ((1, 2), (3, 4), (5, 7))
    assert R.xi == {2: (3,), 3: (2, 2)}
    assert R.xi_tuple() == ((), (3,), (2, 2))
    R2 = RectSeq.of((2, 3), (1, 2))
    assert R2.rows_seq() == RectSeq.of((1, 3), (1, 3), (1, 2))
    assert R2.transpose() == RectSeq.of((3, 2), (2, 1))


def test_keys():
    assert key_rect(3, 2, 1) == tableau([[1, 1, 1], [2, 2, 2]])
    assert key_rect(2, 3, 5) == tableau([[5, 5], [6, 6], [7, 7]])
    assert key_rect(1, 1, 4) == tableau([[4]])


def test_lr_word_membership():
    assert is_lr_word(row_word(T_IOTA), RectSeq.of((4, 3), (2, 3)))
    col = RectSeq.of((2, 1))
    assert is_lr_word((2, 1), col)
    assert not is_lr_word((1, 2), col)
    assert is_lr_word((), RectSeq(()))


def test_enumerate_example():
    R = RectSeq.of((4, 3), (2, 3))
    assert enumerate_lrt((5, 4, 3, 3, 2, 1), R) == (T_IOTA,)
    assert enumerate_lrt((3, 3, 3, 3, 3, 3), R) == (key_rect(3, 6, 1),)


def test_single_rectangle_and_singletons():
    R = RectSeq.of((2, 3))
    assert all_lrt(R) == (key_rect(3, 2, 1),)
    assert len(all_lrt(RectSeq.of((1, 1), (1, 1), (1, 1)))) == 4


def test_pseudo_order():
    assert pseudo_geq(RectSeq.of((4, 3), (2, 3)), RectSeq.of((3, 3), (3, 3)))
    assert not pseudo_geq(RectSeq.of((3, 3), (3, 3)), RectSeq.of((4, 3), (2, 3)))
    for R in sequences_up_to(5, 2):
        assert pseudo_geq(R, R)
        assert pseudo_geq(R, R.rows_seq())
    a, b = RectSeq.of((2, 2)), RectSeq.of((2, 3))
    assert not pseudo_geq(a, b) and not pseudo_geq(b, a)


def test_chain_examples():
    R, S = RectSeq.of((4, 3), (2, 3)), RectSeq.of((3, 3), (3, 3))
    assert chain_between(R, S) == [ElementaryStep("E1", 1, 3, 4, 2)]
    assert chain_between(R, R) == []
    assert chain_between(RectSeq.of((1, 2), (1, 3)), RectSeq.of((1, 3), (1, 2))) == [ElementaryStep("E2", 1)]


def test_chains_replay_to_target():
    rng = random.Random(3)
    for R in sequences_up_to(6, 3):
        gamma = tuple(sorted(R.gamma, reverse=True))
        for D in dominant_sequences(gamma):
            if pseudo_geq(R, D):
                for chain in (chain_between(R, D), chain_between(R, D, rng)):
                    assert replay(R, chain) == D
                    assert all(s.kind == "E2" or s.position == 1 for s in chain)


def test_apply_step_errors():
    with pytest.raises(ChainError):
        apply_step(RectSeq.of((2, 3), (2, 3)), ElementaryStep("E1", 1, 3, 2, 2))
    with pytest.raises(ChainError):
        apply_step(RectSeq.of((2, 3)), ElementaryStep("E2", 1))
    assert apply_step(RectSeq.of((3, 2)), ElementaryStep("E1", 1, 2, 3, 0)) == RectSeq.of((2, 2), (1, 2))


def test_dominant_sequences():
    got = {str(R) for R in dominant_sequences((3, 3, 2, 2, 2))}
    assert got == {"2x3,3x2", "2x3,2x2,1x2", "2x3,1x2,1x2,1x2", "1x3,1x3,3x2",
                   "1x3,1x3,2x2,1x2", "1x3,1x3,1x2,1x2,1x2"}
