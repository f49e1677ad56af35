from fractions import Fraction

import pytest

from nchopf import GF, QQ, Scalar, binomial, is_prime, multinomial_partition_coefficient
from nchopf.errors import DivisionByZero, FieldMismatch, InvalidPartition, NonPrimeP
from nchopf.scalars import field_for


def test_prime_field_arithmetic():
    F = GF(5)
    assert F(7) == 2
    assert F(-1) == 4
    assert F.inv(2) == 3
    assert F.mul(F.inv(3), 3) == 1
    assert F(Fraction(1, 2)) == 3


def test_rationals_stay_exact():
    assert QQ.add(Fraction(1, 3), Fraction(2, 3)) == 1
    assert QQ.inv(Fraction(-2, 7)) == Fraction(-7, 2)


def test_scalar_wrapper():
    F = GF(5)
    assert Scalar(3, F) * Scalar(2, F) == Scalar(1, F)
    assert Scalar(3, F) / Scalar(2, F) == Scalar(4, F)
    assert Scalar(1) / Scalar(3) == Scalar(Fraction(1, 3))
    with pytest.raises(FieldMismatch):
        Scalar(1, F) + Scalar(1)
    with pytest.raises(DivisionByZero):
        Scalar(0, F).inverse()


def test_field_construction():
    with pytest.raises(NonPrimeP):
        GF(4)
    assert field_for(0) == QQ
    assert field_for(7) == GF(7)
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_binomial_edges():
    assert binomial(5, 2) == 10
    assert binomial(3, 4) == 0
    assert binomial(3, -1) == 0


def test_partition_coefficients():
    # {1,2,3,4} into two pairs: 3 ways; {1..5} into one singleton and two pairs: 15
    assert multinomial_partition_coefficient(4, {2: 2}) == 3
    assert multinomial_partition_coefficient(5, {1: 1, 2: 2}) == 15
    assert multinomial_partition_coefficient(3, {1: 3}) == 1
    with pytest.raises(InvalidPartition):
        multinomial_partition_coefficient(4, {3: 1})
