import pytest

from nchopf import (GF, QQ, CPoly, abelianization_check, bell_polynomial, check_L_iso, check_R_iso,
                    fdb_coproduct, ncfdb_coproduct)
from nchopf.errors import BadIndices, CharPositive
from nchopf.fdb import cpoly_algebra, fpoly_algebra, omega_product, weak_compositions
from nchopf.scalars import binomial
from nchopf.vector import Tensor


def test_bell_examples():
    C = cpoly_algebra(QQ)
    assert bell_polynomial(3, 2) == (C.u(1) * C.u(2)).scale(3)
    for n in range(1, 8):
        assert bell_polynomial(n, 1) == C.u(n)
        assert bell_polynomial(n, n) == C.u(1, n)
    with pytest.raises(BadIndices):
        bell_polynomial(2, 3)


@pytest.mark.parametrize("n", range(2, 11))
def test_bell_recurrence(n):
    C = cpoly_algebra(QQ)
    for k in range(2, n + 1):
        rhs = C.zero()
        for i in range(1, n - k + 2):
            rhs = rhs + (C.u(i) * bell_polynomial(n - i, k - 1)).scale(binomial(n - 1, i - 1))
        assert bell_polynomial(n, k) == rhs, (n, k)


def test_bell_sum_counts_set_partitions():
    # setting every u_i = 1 gives Stirling numbers of the second kind
    stirling = {(4, 2): 7, (5, 2): 15, (5, 3): 25, (6, 3): 90}
    for (n, k), s in stirling.items():
        assert sum(bell_polynomial(n, k).terms.values()) == s


def test_fdb_coproduct_examples():
    C = cpoly_algebra(QQ)
    u1, u2, u3 = C.u(1), C.u(2), C.u(3)
    assert fdb_coproduct(u1) == Tensor.pure(u1, u1)
    assert fdb_coproduct(u3) == Tensor.pure(u1, u3) + Tensor.pure(u2, (u1 * u2).scale(3)) + Tensor.pure(u3, u1 ** 3)
    assert fdb_coproduct(u2 ** 2) == fdb_coproduct(u2) * fdb_coproduct(u2)
    H = cpoly_algebra(QQ, inverted=True)
    inv = H.u(1, -1)
    assert H.coproduct(inv) == Tensor.pure(inv, inv)
    assert str(inv) == "u1^-1"


def test_ncfdb_coproduct_examples():
    F = fpoly_algebra(QQ)
    a0, a1, a2 = F.a(0), F.a(1), F.a(2)
    assert ncfdb_coproduct(a0) == Tensor.pure(a0, a0)
    assert ncfdb_coproduct(a1) == Tensor.pure(a0, a1) + Tensor.pure(a1, a0 * a0)
    assert ncfdb_coproduct(a2) == (Tensor.pure(a0, a2) + Tensor.pure(a1, a0 * a1 + a1 * a0)
                                   + Tensor.pure(a2, a0 * a0 * a0))


def _coassociative(A, key):
    d = A.coproduct_key(key)
    left, right = {}, {}
    for (x, y), v in d.items():
        for (x1, x2), u in A.coproduct_key(x).items():
            left[(x1, x2, y)] = left.get((x1, x2, y), 0) + v * u
        for (y1, y2), u in A.coproduct_key(y).items():
            right[(x, y1, y2)] = right.get((x, y1, y2), 0) + v * u
    strip = lambda m: {k: v for k, v in m.items() if v}
    return strip(left) == strip(right)


def test_coassociativity_and_grading():
    F = fpoly_algebra(QQ)
    C = cpoly_algebra(QQ)
    for n in range(6):
        assert _coassociative(F, (n,))
        assert all(F.degree(x) + F.degree(y) == n for x, y in F.coproduct_key((n,)))
    for n in range(1, 7):
        key = next(iter(C.u(n).terms))
        assert _coassociative(C, key)
        assert all(C.degree(x) + C.degree(y) == n - 1 for x, y in C.coproduct_key(key))


def test_hfdb_antipode():
    H = cpoly_algebra(QQ, inverted=True)
    for n in range(1, 6):
        x = H.u(n)
        acc = H.zero()
        for (a, b), v in H.coproduct(x).terms.items():
            acc = acc + (H.antipode(H.monomial(a)) * H.monomial(b)).scale(v)
        assert acc == H.one().scale(1 if n == 1 else 0)


def test_weak_compositions():
    assert sorted(weak_compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(weak_compositions(4, 3))) == binomial(6, 2)


def test_L_iso_small_case():
    # g*SH_{1,1} = omega_1 omega_0 + omega_0 omega_1 = ghg + ggh
    assert omega_product((1, 0)) + omega_product((0, 1)) == omega_product((1, 0)).algebra.word("ghg") + \
        omega_product((1, 0)).algebra.word("ggh")


@pytest.mark.parametrize("field", [QQ, GF(3), GF(5)], ids=["Q", "F3", "F5"])
def test_iso_reports(field):
    assert check_L_iso(5, field).ok
    assert check_R_iso(5, field).ok


def test_abelianization_needs_characteristic_zero():
    assert abelianization_check(4).ok
    with pytest.raises(CharPositive):
        abelianization_check(3, GF(5))


def test_cpoly_constructor():
    x = CPoly({(0, 1): 2})
    assert x == cpoly_algebra(QQ).u(2).scale(2)
