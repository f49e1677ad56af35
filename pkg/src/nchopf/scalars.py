"""Exact coefficient fields (Q and F_p) and integer combinatorics."""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import DivisionByZero, FieldMismatch, InvalidPartition, NonPrimeP


def is_prime(p):
    if not isinstance(p, int) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def binomial(n, k):
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial_partition_coefficient(n, t):
    """Number of set partitions of an n-set with t[i] blocks of size i."""
    if sum(i * m for i, m in t.items()) != n or any(i < 1 or m < 0 for i, m in t.items()):
        raise InvalidPartition(f"block sizes {dict(t)} do not sum to {n}")
    den = 1
    for i, m in t.items():
        den *= factorial(m) * factorial(i) ** m
    return factorial(n) // den


class Field:
    """Raw field values are plain ints/Fractions; the field object does the arithmetic."""

    characteristic = 0

    def __eq__(self, other):
        return isinstance(other, Field) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash(("field", self.characteristic))


class RationalField(Field):
    characteristic = 0
    zero = 0
    one = 1

    def __repr__(self):
        return "QQ"

    def __call__(self, x):
        if isinstance(x, Fraction):
            return int(x) if x.denominator == 1 else x
        if isinstance(x, int):
            return x
        if isinstance(x, str):
            return self(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def from_int(self, n):
        return n

    def add(self, a, b):
        r = a + b
        return int(r) if type(r) is Fraction and r.denominator == 1 else r

    def sub(self, a, b):
        r = a - b
        return int(r) if type(r) is Fraction and r.denominator == 1 else r

    def mul(self, a, b):
        r = a * b
        return int(r) if type(r) is Fraction and r.denominator == 1 else r

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero in QQ")
        r = Fraction(1) / a
        return int(r) if r.denominator == 1 else r

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, a):
        return str(a)

    def to_fraction(self, a):
        return Fraction(a)


class PrimeField(Field):
    zero = 0
    one = 1

    def __init__(self, p):
        if not is_prime(p):
            raise NonPrimeP(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __repr__(self):
        return f"GF({self.p})"

    def __call__(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        if isinstance(x, str):
            return self(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"division by zero in GF({self.p})")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def to_str(self, a):
        return str(a)


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


def field_for(characteristic):
    return QQ if characteristic == 0 else GF(characteristic)


class Scalar:
    """A field element that remembers its field."""

    __slots__ = ("field", "value")

    def __init__(self, value, field=QQ):
        self.field = field
        self.value = field(value)

    def _check(self, other):
        if not isinstance(other, Scalar):
            return Scalar(other, self.field)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        o = self._check(other)
        return Scalar(self.field.add(self.value, o.value), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        return Scalar(self.field.sub(self.value, o.value), self.field)

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        o = self._check(other)
        return Scalar(self.field.mul(self.value, o.value), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._check(other)
        return Scalar(self.field.div(self.value, o.value), self.field)

    def __rtruediv__(self, other):
        return self._check(other) / self

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def inverse(self):
        return Scalar(self.field.inv(self.value), self.field)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.field.characteristic, self.value))

    def is_zero(self):
        return self.value == 0

    def __repr__(self):
        if self.field.characteristic:
            return f"{self.value} mod {self.field.characteristic}"
        return str(self.value)

    __str__ = __repr__


def scalar_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")
