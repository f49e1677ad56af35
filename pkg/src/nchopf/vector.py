"""Finitely supported linear combinations of basis keys over an exact field.

An algebra object supplies ``field``, ``one_key``, ``mono_mul(k1, k2)``
(returning a dict key -> raw field value) and ``format_key(k)``.
"""

from fractions import Fraction

from .errors import FieldMismatch, SpecMismatch
from .scalars import Scalar


def _coerce_scalar(field, c):
    if isinstance(c, Scalar):
        if c.field != field:
            raise FieldMismatch(f"{c.field!r} vs {field!r}")
        return c.value
    if isinstance(c, (int, Fraction, str)):
        return field(c)
    return None


def _fmt_coeff(field, c, key_str):
    """Returns (sign, body) for printing c*key."""
    if field.characteristic == 0:
        neg = c < 0
        a = -c if neg else c
    else:
        neg, a = False, c
    s = field.to_str(a)
    if key_str == "1":
        body = s
    elif a == 1:
        body = key_str
    else:
        body = f"{s}*{key_str}"
    return neg, body


def format_terms(field, items, format_key):
    if not items:
        return "0"
    parts = []
    for k, c in items:
        neg, body = _fmt_coeff(field, c, format_key(k))
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def add_into(acc, other, field, scale=1):
    """acc += scale * other, in place on raw dicts."""
    add, mul = field.add, field.mul
    for k, v in other.items():
        if scale != 1:
            v = mul(v, scale)
        nv = add(acc.get(k, 0), v) if k in acc else v
        if nv == 0:
            acc.pop(k, None)
        else:
            acc[k] = nv
    return acc


class Element:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @property
    def field(self):
        return self.algebra.field

    @classmethod
    def monomial(cls, algebra, key, coeff=1):
        return cls(algebra, {key: algebra.field(coeff)})

    def _same(self, other):
        if other.algebra != self.algebra:
            if other.field != self.field:
                raise FieldMismatch(f"{other.field!r} vs {self.field!r}")
            raise SpecMismatch(f"{other.algebra!r} vs {self.algebra!r}")

    def _lift(self, other):
        if isinstance(other, Element):
            self._same(other)
            return other
        c = _coerce_scalar(self.field, other)
        if c is None:
            return None
        return Element(self.algebra, {self.algebra.one_key: c})

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Element(self.algebra, add_into(dict(self.terms), o.terms, self.field))

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Element(self.algebra, {k: f.neg(v) for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c):
        f = self.field
        c = _coerce_scalar(f, c)
        if c == 0:
            return Element(self.algebra)
        return Element(self.algebra, {k: f.mul(v, c) for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Element):
            if _coerce_scalar(self.field, other) is None:
                return NotImplemented
            return self.scale(other)
        self._same(other)
        return Element(self.algebra, self.algebra.multiply_terms(self.terms, other.terms))

    def __rmul__(self, other):
        if _coerce_scalar(self.field, other) is None:
            return NotImplemented
        return self.scale(other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.algebra.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra == other.algebra and self.terms == other.terms
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def coefficient(self, key):
        return Scalar(self.terms.get(key, 0), self.field)

    def support(self):
        return sorted(self.terms, key=self.algebra.sort_key)

    def items(self):
        return [(k, self.terms[k]) for k in self.support()]

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return format_terms(self.field, self.items(), self.algebra.format_key)

    def __repr__(self):
        return f"<{self.algebra!r}: {self}>"

    def map_terms(self, target, fn):
        """Linear extension of fn: key -> Element (or dict) into target."""
        f = target.field
        acc = {}
        for k, v in self.terms.items():
            img = fn(k)
            img = img.terms if isinstance(img, Element) else img
            add_into(acc, img, f, v)
        return Element(target, acc)


class Tensor:
    """Element of A (x) B with componentwise product."""

    __slots__ = ("left", "right", "terms")

    def __init__(self, left, right=None, terms=None):
        self.left = left
        self.right = right if right is not None else left
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @property
    def field(self):
        return self.left.field

    @classmethod
    def pure(cls, a, b):
        f = a.field
        terms = {}
        for k1, v1 in a.terms.items():
            for k2, v2 in b.terms.items():
                terms[(k1, k2)] = f.mul(v1, v2)
        return cls(a.algebra, b.algebra, terms)

    def _same(self, other):
        if (other.left, other.right) != (self.left, self.right):
            raise SpecMismatch("tensor factors differ")

    def __add__(self, other):
        self._same(other)
        return Tensor(self.left, self.right, add_into(dict(self.terms), other.terms, self.field))

    def __neg__(self):
        f = self.field
        return Tensor(self.left, self.right, {k: f.neg(v) for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        f = self.field
        c = _coerce_scalar(f, c)
        return Tensor(self.left, self.right, {k: f.mul(v, c) for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, Tensor):
            return self.scale(other)
        self._same(other)
        f = self.field
        ml, mr = self.left.mono_mul, self.right.mono_mul
        acc = {}
        for (a1, a2), v in self.terms.items():
            for (b1, b2), w in other.terms.items():
                vw = f.mul(v, w)
                p1 = ml(a1, b1)
                if not p1:
                    continue
                p2 = mr(a2, b2)
                for k1, c1 in p1.items():
                    c1v = f.mul(vw, c1)
                    for k2, c2 in p2.items():
                        key = (k1, k2)
                        nv = f.add(acc.get(key, 0), f.mul(c1v, c2))
                        if nv:
                            acc[key] = nv
                        else:
                            acc.pop(key, None)
        return Tensor(self.left, self.right, acc)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.left, self.right) == (other.left, other.right) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, k1, k2):
        return Scalar(self.terms.get((k1, k2), 0), self.field)

    def swap(self):
        return Tensor(self.right, self.left, {(b, a): v for (a, b), v in self.terms.items()})

    def items(self):
        sl, sr = self.left.sort_key, self.right.sort_key
        keys = sorted(self.terms, key=lambda k: (sl(k[0]), sr(k[1])))
        return [(k, self.terms[k]) for k in keys]

    def __str__(self):
        fl, fr = self.left.format_key, self.right.format_key
        return format_terms(self.field, self.items(), lambda k: f"{fl(k[0])} (x) {fr(k[1])}")

    def __repr__(self):
        return f"<tensor: {self}>"

    def __len__(self):
        return len(self.terms)


class AlgebraBase:
    """Shared helpers; subclasses define field, one_key, mono_mul, format_key."""

    one_key = ()

    def sort_key(self, k):
        return k

    def one(self):
        return Element(self, {self.one_key: self.field.one})

    def zero(self):
        return Element(self)

    def element(self, terms):
        return Element(self, terms)

    def monomial(self, key, coeff=1):
        return Element(self, {key: self.field(coeff)})

    def multiply_terms(self, a, b):
        f = self.field
        acc = {}
        mm = self.mono_mul
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                add_into(acc, mm(k1, k2), f, f.mul(v1, v2))
        return acc
