"""Generalized Kostka polynomials, Kostka-Foulkes polynomials and an
independent Littlewood-Richardson oracle."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Sequence

from .charge import charge_tab, ls_charge, ls_cocharge, n_mu, n_stat
from .core import Partition, conjugate, partitions_of, row_word
from .lrwords import RectSeq, all_lrt, column_strict_fillings, enumerate_lrt, pseudo_geq


class QPoly:
    """Polynomial in ``q`` with integer coefficients, stored sparsely."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, int] | Iterable[int] | None = None):
        if coeffs is None:
            coeffs = {}
        if not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        self._c = {int(d): int(c) for d, c in coeffs.items() if c}

    @classmethod
    def monomial(cls, d: int, c: int = 1) -> "QPoly":
        return cls({d: c})

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "QPoly":
        return cls(dict(Counter(degrees)))

    def coeff(self, d: int) -> int:
        return self._c.get(d, 0)

    @property
    def degree(self) -> int:
        return max(self._c, default=-1)

    def coefficients(self) -> list[int]:
        return [self.coeff(d) for d in range(self.degree + 1)]

    def __call__(self, q):
        return sum(c * q ** d for d, c in self._c.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly({0: other})
        return isinstance(other, QPoly) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "QPoly") -> "QPoly":
        out = dict(self._c)
        for d, c in other._c.items():
            out[d] = out.get(d, 0) + c
        return QPoly(out)

    def __sub__(self, other: "QPoly") -> "QPoly":
        out = dict(self._c)
        for d, c in other._c.items():
            out[d] = out.get(d, 0) - c
        return QPoly(out)

    def __mul__(self, other: "QPoly") -> "QPoly":
        out: dict[int, int] = {}
        for d1, c1 in self._c.items():
            for d2, c2 in other._c.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return QPoly(out)

    def __le__(self, other: "QPoly") -> bool:
        """Coefficientwise comparison."""
        return all(other.coeff(d) - c >= 0 for d, c in self._c.items()) and \
            all(c >= 0 for d, c in other._c.items() if d not in self._c)

    def reflect(self, n: int) -> "QPoly":
        """``q^n P(1/q)``; requires ``deg P <= n``."""
        if self.degree > n:
            raise ValueError(f"degree {self.degree} exceeds {n}")
        return QPoly({n - d: c for d, c in self._c.items()})

    def to_json(self) -> list[int]:
        return self.coefficients()

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for d in sorted(self._c):
            c = self._c[d]
            if d == 0:
                terms.append(str(c))
            else:
                mono = "q" if d == 1 else f"q^{d}"
                terms.append(mono if c == 1 else f"{c} {mono}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"QPoly({self.coefficients()})"


ZERO = QPoly()
ONE = QPoly({0: 1})


def kostka_poly(shape: Sequence[int], R: RectSeq) -> QPoly:
    """``sum q^charge`` over ``LRT(shape; R)``, with ``R`` put in dominant form."""
    R = R.canonical()
    return QPoly.from_degrees(charge_tab(T, R) for T in enumerate_lrt(tuple(shape), R))


def kostka_polys(R: RectSeq) -> dict[Partition, QPoly]:
    """Every nonzero ``K_{lambda;R}``."""
    R = R.canonical()
    out: dict[Partition, list[int]] = {}
    for T in all_lrt(R):
        out.setdefault(T.shape, []).append(charge_tab(T, R))
    return {lam: QPoly.from_degrees(v) for lam, v in out.items()}


def kostka_foulkes(lam: Sequence[int], mu: Sequence[int]) -> QPoly:
    """Normalized ``K~_{lambda,mu}``: cocharge over ``CST(lambda, mu)``."""
    if sum(lam) != sum(mu):
        return ZERO
    return QPoly.from_degrees(ls_cocharge(row_word(T)) for T in column_strict_fillings(lam, mu))


def kostka_foulkes_charge(lam: Sequence[int], mu: Sequence[int]) -> QPoly:
    """``K_{lambda,mu}``: charge over ``CST(lambda, mu)``."""
    if sum(lam) != sum(mu):
        return ZERO
    return QPoly.from_degrees(ls_charge(row_word(T)) for T in column_strict_fillings(lam, mu))


# -- Littlewood-Richardson oracle --------------------------------------------

def _horizontal_strips(outer: list[int], count: int):
    """Ways to add a horizontal strip of ``count`` cells to ``outer``."""
    rows = len(outer)

    def rec(i: int, left: int, cur: list[int]):
        if i == rows + 1:
            if left == 0:
                yield cur[:]
            return
        prev_old = outer[i - 1] if i > 0 else None
        old = outer[i] if i < rows else 0
        cap = left if i == 0 else min(left, prev_old - old)
        for add in range(cap, -1, -1):
            cur.append(add)
            yield from rec(i + 1, left - add, cur)
            cur.pop()

    yield from rec(0, count, [])


@lru_cache(maxsize=None)
def lr_coefficients(lam: Partition, nu: Partition) -> dict[Partition, int]:
    """``s_lam * s_nu`` expanded in Schur functions, by counting skew fillings
    of ``mu / lam`` with content ``nu`` whose reverse reading word is lattice."""
    out: Counter = Counter()

    def rec(letter: int, outer: list[int], labels: dict[tuple[int, int], int]):
        if letter > len(nu):
            if _lattice_reverse_reading(labels):
                out[tuple(x for x in outer if x)] += 1
            return
        for add in _horizontal_strips(outer, nu[letter - 1]):
            new = list(outer) + [0] * (len(add) - len(outer))
            lab = dict(labels)
            for i, a in enumerate(add):
                for j in range(new[i], new[i] + a):
                    lab[(i, j)] = letter
                new[i] += a
            while new and new[-1] == 0:
                new.pop()
            rec(letter + 1, new, lab)

    rec(1, list(lam), {})
    return dict(out)


def _lattice_reverse_reading(labels: dict[tuple[int, int], int]) -> bool:
    counts: Counter = Counter()
    for (i, j) in sorted(labels, key=lambda c: (c[0], -c[1])):
        x = labels[(i, j)]
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return False
    return True


@lru_cache(maxsize=None)
def _product(rects: tuple[Partition, ...]) -> dict[Partition, int]:
    acc: dict[Partition, int] = {(): 1}
    for nu in rects:
        nxt: Counter = Counter()
        for lam, m in acc.items():
            for mu, c in lr_coefficients(lam, nu).items():
                nxt[mu] += m * c
        acc = dict(nxt)
    return acc


def lr_mult(shape: Sequence[int], R: RectSeq) -> int:
    """Coefficient of ``s_shape`` in the product of the rectangle Schur functions."""
    return _product(tuple(r.partition for r in R.rects)).get(tuple(shape), 0)


def lr_product(R: RectSeq) -> dict[Partition, int]:
    return dict(_product(tuple(r.partition for r in R.rects)))


# -- theorem checks ------------------------------------------------------------

def verify_monotonicity(R: RectSeq, S: RectSeq) -> dict:
    """``K_{lambda;R} <= K_{lambda;S}`` for every shape, with ``theta`` as the
    witness: a shape- and charge-preserving injection ``LRT(R) -> LRT(S)``."""
    from .embed import theta_map
    if not (R.is_dominant() and S.is_dominant()):
        raise ValueError("dominant sequences required")
    if not pseudo_geq(R, S):
        raise ValueError(f"{R} does not dominate {S}")
    KR, KS = kostka_polys(R), kostka_polys(S)
    m = theta_map(R, S)
    shapes = sorted(set(KR) | set(KS), reverse=True)
    rows = []
    ok = len(set(m.values())) == len(m)
    for lam in shapes:
        a, b = KR.get(lam, ZERO), KS.get(lam, ZERO)
        image = QPoly.from_degrees(charge_tab(U, S) for T, U in m.items() if T.shape == lam)
        witnessed = image == a and all(U.shape == T.shape for T, U in m.items())
        rows.append({"shape": lam, "K_R": a, "K_S": b, "leq": a <= b, "witnessed": witnessed})
        ok = ok and a <= b and witnessed
    return {"R": str(R), "S": str(S), "ok": ok, "shapes": rows}


def verify_duality(R: RectSeq) -> dict:
    """``K_{lambda^t;R'}(q) == q^{n(R)} K_{lambda;R}(1/q)`` with ``R'`` the
    dominant rearrangement of the transposed sequence."""
    if not R.is_dominant():
        raise ValueError("dominant sequence required")
    Rt = R.transpose().canonical()
    n = n_stat(R)
    KR, KT = kostka_polys(R), kostka_polys(Rt)
    rows = []
    ok = set(KT) == {conjugate(lam) for lam in KR}
    for lam in sorted(KR, reverse=True):
        lhs = KT.get(conjugate(lam), ZERO)
        rhs = KR[lam].reflect(n)
        rows.append({"shape": lam, "lhs": lhs, "rhs": rhs, "equal": lhs == rhs})
        ok = ok and lhs == rhs
    return {"R": str(R), "n": n, "ok": ok, "shapes": rows}


def kostka_consistency(mu: Sequence[int]) -> dict:
    """Kostka-Foulkes against the generalized polynomials for ``rows(mu)`` and
    for the columns ``((1^mu_1), (1^mu_2), ...)``."""
    mu = tuple(mu)
    rows = RectSeq(tuple((1, m) for m in mu))
    cols = RectSeq(tuple((m, 1) for m in mu))
    out = {"mu": mu, "ok": True, "shapes": []}
    for lam in partitions_of(sum(mu)):
        k_charge = kostka_foulkes_charge(lam, mu)
        k_tilde = kostka_foulkes(lam, mu)
        a = kostka_poly(lam, rows)
        b = kostka_poly(conjugate(lam), cols)
        good = a == k_charge and b == k_tilde and k_tilde == k_charge.reflect(n_mu(mu)) \
            if k_charge != ZERO else a == ZERO and b == ZERO
        out["shapes"].append({"shape": lam, "K": k_charge, "Ktilde": k_tilde, "ok": good})
        out["ok"] = out["ok"] and good
    return out
