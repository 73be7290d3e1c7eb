from hypothesis import given, strategies as st

from rectkostka.charge import n_mu
from rectkostka.core import partitions_of
from rectkostka.lrwords import RectSeq, all_lrt, sequences_up_to
from rectkostka.poly import (ONE, ZERO, QPoly, kostka_consistency, kostka_foulkes, kostka_foulkes_charge,
                             kostka_poly, kostka_polys, lr_coefficients, lr_mult, lr_product,
                             verify_duality, verify_monotonicity)

coeffs = st.lists(st.integers(-3, 3), max_size=5)


def test_qpoly_basics():
    p = QPoly([0, 1, 1])
    assert str(p) == "q + q^2"
    assert str(QPoly([1, 0, 2])) == "1 + 2 q^2"
    assert str(ZERO) == "0"
    assert p(1) == 2 and p.degree == 2
    assert p.reflect(3) == QPoly([0, 1, 1])
    assert p.to_json() == [0, 1, 1]
    assert ONE <= p + ONE and not (p <= ONE)


@given(coeffs, coeffs)
def test_qpoly_ring(a, b):
    p, q = QPoly(a), QPoly(b)
    assert p + q == q + p
    assert (p * q)(2) == p(2) * q(2)
    assert p - p == ZERO


def test_example_monomial():
    R = RectSeq.of((4, 3), (2, 3))
    assert kostka_poly((5, 4, 3, 3, 2, 1), R) == QPoly.monomial(3)
    assert lr_mult((5, 4, 3, 3, 2, 1), R) == 1


def test_single_rectangle():
    assert kostka_polys(RectSeq.of((2, 3))) == {(3, 3): ONE}


def test_lr_small():
    assert lr_mult((2,), RectSeq.of((1, 1), (1, 1))) == 1
    assert lr_coefficients((2, 1), (2, 1))[(3, 2, 1)] == 2
    assert sum(lr_coefficients((1,), (1,)).values()) == 2


def test_q1_oracle():
    for R in sequences_up_to(7, 3):
        K = kostka_polys(R)
        L = lr_product(R)
        assert {lam: p(1) for lam, p in K.items()} == {lam: c for lam, c in L.items() if c}
        assert sum(L.values()) == len(all_lrt(R.canonical()))


def test_kostka_foulkes():
    assert kostka_foulkes((2, 1), (1, 1, 1)) == QPoly([0, 1, 1])
    for n in range(1, 6):
        for lam in partitions_of(n):
            assert kostka_foulkes_charge(lam, lam) == ONE
            assert kostka_foulkes(lam, lam) == QPoly.monomial(n_mu(lam))
            assert kostka_foulkes((n,), lam) == ONE


def test_kostka_consistency_small():
    for mu in [(2, 1), (1, 1, 1), (2, 2), (3, 1, 1)]:
        assert kostka_consistency(mu)["ok"]


def test_monotonicity_example():
    rep = verify_monotonicity(RectSeq.of((4, 3), (2, 3)), RectSeq.of((3, 3), (3, 3)))
    assert rep["ok"]
    R = RectSeq.of((2, 2), (1, 1))
    assert verify_monotonicity(R, R)["ok"]
    for row in verify_monotonicity(R, R)["shapes"]:
        assert row["K_R"] == row["K_S"]


def test_rows_bound():
    for R in sequences_up_to(6, 3):
        D = R.canonical()
        rows = D.rows_seq()
        K = kostka_polys(D)
        for lam, p in K.items():
            assert p <= kostka_foulkes_charge(lam, rows.gamma)


def test_duality():
    assert verify_duality(RectSeq.of((2, 3)))["ok"]
    assert verify_duality(RectSeq.of((1, 2), (1, 1)))["ok"]
    rep = verify_duality(RectSeq.of((4, 3), (2, 3)))
    assert rep["ok"] and rep["n"] == 6
