from itertools import permutations

from hypothesis import given, settings, strategies as st

from rectkostka.charge import (charge_R, charge_tab, cocharge_R, d_pair, d_shape, dtilde_pair,
                               dtilde_shape, ls_charge, ls_cocharge, n_mu, n_stat, orbit)
from rectkostka.core import partitions_of, row_word, tableau
from rectkostka.embed import tau_tab
from rectkostka.poly import lr_product
from rectkostka.lrwords import RectSeq, all_lrt, column_strict_fillings, sequences_up_to
from rectkostka.transpose import lr_words

T_IOTA = tableau([[1, 1, 1, 5, 5], [2, 2, 2, 6], [3, 3, 3], [4, 4, 4], [5, 6], [6]])
R_IOTA = RectSeq.of((4, 3), (2, 3))


def test_d_statistics_example():
    shape = T_IOTA.shape
    r1, r2 = R_IOTA.rects
    assert d_shape(shape, r1, r2) == 3
    assert dtilde_shape(shape, r1, r2) == 3
    w = row_word(T_IOTA)
    assert d_pair(w, r1, r2) + dtilde_pair(w, r1, r2) == 6
    assert d_shape((3,) * 6, r1, r2) == 0
    assert dtilde_shape((5, 4, 3, 3), r1, r2) == 0


def test_d_complement_two_rectangles():
    # d only depends on the shape; shapes of LRT(R) come from the LR oracle
    seen = 0
    for R in sequences_up_to(12, 2):
        if R.t != 2:
            continue
        r1, r2 = R.rects
        overlap = min(r1.rows, r2.rows) * min(r1.cols, r2.cols)
        for lam in lr_product(R):
            assert d_shape(lam, r1, r2) + dtilde_shape(lam, r1, r2) == overlap
            seen += 1
    assert seen > 1000
    for R in sequences_up_to(7, 2):
        if R.t == 2:
            for T in all_lrt(R):
                assert d_pair(row_word(T), *R.rects) == d_shape(T.shape, *R.rects)


def test_n_stat():
    assert n_stat(RectSeq.of((2, 3), (2, 3), (3, 2))) == 14
    assert n_stat(RectSeq.of((3, 4))) == 0
    assert n_stat(RectSeq.of((1, 2), (1, 1))) == 1 == n_mu((2, 1))


def test_single_rectangle_charge_zero():
    R = RectSeq.of((2, 3))
    for w in lr_words(R):
        assert charge_R(w, R) == 0 == cocharge_R(w, R)


def test_ls_charge_small():
    # the two standard tableaux of shape (2,1)
    got = sorted(ls_cocharge(row_word(T)) for T in column_strict_fillings((2, 1), (1, 1, 1)))
    assert got == [1, 2]
    key = tableau([[1, 1, 1], [2, 2], [3]])
    assert ls_charge(row_word(key)) == 0


def test_ls_charge_complement():
    for mu in [(2, 1), (2, 2), (3, 1, 1), (2, 2, 1)]:
        for lam in partitions_of(sum(mu)):
            for T in column_strict_fillings(lam, mu):
                w = row_word(T)
                assert ls_charge(w) + ls_cocharge(w) == n_mu(mu)


def test_rows_case_agrees_with_ls():
    for mu in [(2, 1), (3, 2), (2, 2, 1), (3, 1, 1), (2, 1, 1, 1), (3, 2, 1)]:
        R = RectSeq(tuple((1, m) for m in mu))
        for T in all_lrt(R):
            assert charge_tab(T, R) == ls_charge(row_word(T))
    R = RectSeq.of((1, 2), (1, 1))
    for w in set(permutations((1, 1, 2))):
        assert charge_R(w, R) == ls_charge(w)


def test_charge_complement_catalog():
    for R in sequences_up_to(6, 3):
        n = n_stat(R)
        for T in all_lrt(R):
            c = charge_tab(T, R)
            assert 0 <= c <= n


def test_tau_invariance():
    for R in sequences_up_to(7, 3):
        for p in range(1, R.t):
            S = R.swap(p)
            for T in all_lrt(R):
                assert charge_tab(tau_tab(T, R, p), S) == charge_tab(T, R)


def test_orbit_covers_all_orders():
    R = RectSeq.of((1, 2), (2, 1), (1, 1))
    T = all_lrt(R)[0]
    seqs = {S for S, _ in orbit(T, R)}
    assert len(seqs) == 6


rect = st.tuples(st.integers(1, 2), st.integers(1, 3))


@settings(max_examples=30, deadline=None)
@given(st.lists(rect, min_size=1, max_size=3))
def test_charge_cocharge_sum_property(rects):
    R = RectSeq(tuple(rects))
    if R.size > 7:
        return
    for T in all_lrt(R):
        w = row_word(T)
        assert charge_R(w, R) + cocharge_R(w, R) == n_stat(R)
