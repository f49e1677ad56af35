"""Faa di Bruno bialgebras: commutative k[u_1, u_2, ...] (optionally with u_1
inverted) and the free version k<a_0, a_1, ...>, with the maps linking them to
the free bialgebra and to the quotient R."""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import BadIndices, CharPositive, NotHopf
from .fdb_core import bell_int
from .report import Report
from .scalars import QQ
from .vector import AlgebraBase, Element, Tensor, add_into


def _trim(e):
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _eadd(e, f):
    if len(e) < len(f):
        e, f = f, e
    out = list(e)
    for i, x in enumerate(f):
        out[i] += x
    return _trim(out)


class CPolyAlgebra(AlgebraBase):
    """Keys are exponent tuples (e_1, e_2, ...) for u_1^{e_1} u_2^{e_2} ..."""

    one_key = ()

    def __init__(self, field=QQ, inverted=False):
        self.field = field
        self.inverted = inverted
        self._cop = {}

    def __eq__(self, other):
        return isinstance(other, CPolyAlgebra) and (other.field, other.inverted) == (self.field, self.inverted)

    def __hash__(self):
        return hash(("cpoly", self.field, self.inverted))

    def __repr__(self):
        return "HFdB" if self.inverted else "BFdB"

    def sort_key(self, k):
        return (self.degree(k), tuple(-x for x in reversed(k)))

    def degree(self, k):
        return sum(i * x for i, x in enumerate(k))

    def format_key(self, k):
        parts = []
        for i in range(len(k), 0, -1):
            x = k[i - 1]
            if x:
                parts.append(f"u{i}" if x == 1 else f"u{i}^{x}")
        return "*".join(parts) if parts else "1"

    def mono_mul(self, a, b):
        return {_eadd(a, b): 1}

    def u(self, n, power=1):
        if n < 1:
            raise BadIndices(f"u_{n}")
        if power < 0 and not (n == 1 and self.inverted):
            raise BadIndices("only u1 may be inverted, and only in HFdB")
        e = [0] * n
        e[n - 1] = power
        return self.monomial(_trim(e))

    def from_int_terms(self, terms):
        return Element(self, {_trim(k): self.field.from_int(v) for k, v in terms.items()})

    # coalgebra

    def gen_coproduct(self, n):
        """Delta(u_n) as {(key, key): int}."""
        out = {}
        for k in range(1, n + 1):
            left = _trim([0] * (k - 1) + [1])
            for t, v in bell_int(n, k).items():
                out[(left, _trim(t))] = out.get((left, _trim(t)), 0) + v
        return out

    def _tmul(self, x, y):
        out = {}
        for (a1, a2), v in x.items():
            for (b1, b2), w in y.items():
                k = (_eadd(a1, b1), _eadd(a2, b2))
                out[k] = out.get(k, 0) + v * w
        return {k: v for k, v in out.items() if v}

    def coproduct_key(self, key):
        hit = self._cop.get(key)
        if hit is not None:
            return hit
        res = {((), ()): 1}
        for i, x in enumerate(key):
            n = i + 1
            if x < 0:
                inv = _trim([x])
                res = self._tmul(res, {(inv, inv): 1})
                continue
            for _ in range(x):
                res = self._tmul(res, self.gen_coproduct(n))
        f = self.field
        res = {k: f.from_int(v) for k, v in res.items() if f.from_int(v)}
        self._cop[key] = res
        return res

    def coproduct(self, x):
        acc = {}
        for k, v in x.terms.items():
            add_into(acc, self.coproduct_key(k), self.field, v)
        return Tensor(self, self, acc)

    def counit_key(self, key):
        return self.field.one if all(x == 0 for x in key[1:]) else self.field.zero

    def counit(self, x):
        f = self.field
        total = f.zero
        for k, v in x.terms.items():
            total = f.add(total, f.mul(v, self.counit_key(k)))
        return total

    @lru_cache(maxsize=None)
    def antipode_gen(self, n):
        if not self.inverted:
            raise NotHopf("BFdB has no antipode (u1 is not invertible)")
        if n == 1:
            return self.u(1, -1)
        acc = self.zero()
        for k in range(1, n):
            acc = acc + self.antipode_gen(k) * self.from_int_terms(bell_int(n, k))
        return -(self.u(1, -n) * acc)

    def antipode_key(self, key):
        res = self.one()
        for i, x in enumerate(key):
            if x < 0:
                res = res * self.u(1, -x)
            elif x:
                res = res * self.antipode_gen(i + 1) ** x
        return res

    def antipode(self, x):
        acc = {}
        for k, v in x.terms.items():
            add_into(acc, self.antipode_key(k).terms, self.field, v)
        return Element(self, acc)

    def basis_of_degree(self, degree, g_range=range(0, 3)):
        """Monomials of degree d (deg u_n = n-1) with u_1 exponent in g_range."""
        out = []

        def rec(n, remaining, acc):
            if n == 1:
                for b in g_range:
                    if b < 0 and not self.inverted:
                        continue
                    out.append(_trim([b] + acc[1:]))
                return
            for x in range(remaining // (n - 1), -1, -1):
                acc[n - 1] = x
                rec(n - 1, remaining - x * (n - 1), acc)
            acc[n - 1] = 0

        rec(degree + 1, degree, [0] * (degree + 1))
        return out


class FPolyAlgebra(AlgebraBase):
    """Keys are tuples of indices: (i, j, ...) stands for a_i a_j ..."""

    one_key = ()

    def __init__(self, field=QQ):
        self.field = field
        self._cop = {}

    def __eq__(self, other):
        return isinstance(other, FPolyAlgebra) and other.field == self.field

    def __hash__(self):
        return hash(("fpoly", self.field))

    def __repr__(self):
        return "BFdBnc"

    def sort_key(self, k):
        return (sum(k), len(k), k)

    def degree(self, k):
        return sum(k)

    def format_key(self, k):
        return "*".join(f"a{i}" for i in k) if k else "1"

    def mono_mul(self, a, b):
        return {a + b: 1}

    def multiply_terms(self, a, b):
        f = self.field
        acc = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                k = k1 + k2
                nv = f.add(acc.get(k, 0), f.mul(v1, v2))
                if nv:
                    acc[k] = nv
                else:
                    acc.pop(k, None)
        return acc

    def a(self, n):
        if n < 0:
            raise BadIndices(f"a_{n}")
        return self.monomial((n,))

    def gen_coproduct(self, n):
        out = {}
        for k in range(n + 1):
            for comp in weak_compositions(n - k, k + 1):
                key = ((k,), comp)
                out[key] = out.get(key, 0) + 1
        return out

    def coproduct_key(self, key):
        hit = self._cop.get(key)
        if hit is not None:
            return hit
        res = {((), ()): 1}
        for i in key:
            nxt = {}
            for (a1, a2), v in res.items():
                for (b1, b2), w in self.gen_coproduct(i).items():
                    k = (a1 + b1, a2 + b2)
                    nxt[k] = nxt.get(k, 0) + v * w
            res = nxt
        f = self.field
        res = {k: f.from_int(v) for k, v in res.items() if f.from_int(v)}
        self._cop[key] = res
        return res

    def coproduct(self, x):
        acc = {}
        for k, v in x.terms.items():
            add_into(acc, self.coproduct_key(k), self.field, v)
        return Tensor(self, self, acc)

    def counit_key(self, key):
        return self.field.one if all(i == 0 for i in key) else self.field.zero

    def counit(self, x):
        f = self.field
        total = f.zero
        for k, v in x.terms.items():
            total = f.add(total, f.mul(v, self.counit_key(k)))
        return total

    def antipode(self, x):
        raise NotHopf("BFdBnc has no antipode (a0 is not invertible)")

    def basis_of_degree(self, degree, max_len=3):
        out = []
        for length in range(0, max_len + 1):
            out.extend(weak_compositions(degree, length) if length else ([()] if degree == 0 else []))
        return out


def weak_compositions(n, parts):
    """Weak compositions of n into `parts` parts, lexicographic order."""
    if parts == 0:
        return [()] if n == 0 else []
    if parts == 1:
        return [(n,)]
    out = []
    for first in range(n + 1):
        for rest in weak_compositions(n - first, parts - 1):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def cpoly_algebra(field=QQ, inverted=False):
    return CPolyAlgebra(field, inverted)


@lru_cache(maxsize=None)
def fpoly_algebra(field=QQ):
    return FPolyAlgebra(field)


def CPoly(terms, field=QQ, inverted=False):
    return cpoly_algebra(field, inverted).from_int_terms(terms)


def FPoly(terms, field=QQ):
    A = fpoly_algebra(field)
    return Element(A, {tuple(k): field(v) for k, v in terms.items()})


def bell_polynomial(n, k, field=QQ):
    """B_{n,k}(u_1, ..., u_n) with coefficients computed as integers first."""
    return cpoly_algebra(field).from_int_terms(bell_int(n, k))


def fdb_coproduct(x):
    return x.algebra.coproduct(x)


def ncfdb_coproduct(x):
    return x.algebra.coproduct(x)


# maps between the Faa di Bruno algebras and the free / quotient algebras

def omega_product(indices, field=QQ):
    """omega_{i_0} omega_{i_1} ... as an element of the free algebra."""
    from .free import free_algebra
    w = "".join("g" + "h" * i for i in indices)
    return free_algebra(field).word(w)


def check_L_iso(n_max, field=QQ):
    """g*SH_{n-k,k}(h,g) = sum over i_0+...+i_k = n-k of omega_{i_0}...omega_{i_k},
    and omega_n -> a_n intertwines the coproducts."""
    from .free import free_algebra, shuffle_poly, t_coproduct
    rep = Report("iso-L", n_max=n_max)
    A = free_algebra(field)
    g = A.word("g")
    for n in range(n_max + 1):
        for k in range(n + 1):
            lhs = g * shuffle_poly(n - k, k, field)
            rhs = A.zero()
            for comp in weak_compositions(n - k, k + 1):
                rhs = rhs + omega_product(comp, field)
            rep.add(f"g*SH({n - k},{k}) = sum of omega products", lhs == rhs, witness=lhs - rhs)
    F = fpoly_algebra(field)
    for n in range(n_max + 1):
        via_free = t_coproduct(omega_product((n,), field))
        expect = {}
        for (l, r), v in F.coproduct_key((n,)).items():
            left = omega_product(l, field)
            right = omega_product(r, field)
            for w1, c1 in left.terms.items():
                for w2, c2 in right.terms.items():
                    key = (w1, w2)
                    expect[key] = field.add(expect.get(key, 0), field.mul(v, field.mul(c1, c2)))
        expect = {k: v for k, v in expect.items() if v}
        rep.add(f"Delta(omega_{n}) matches Delta(a_{n})", via_free.terms == expect)
    return rep


def check_R_iso(n_max, field=QQ):
    """Delta(E_n) in the quotient equals Delta(u_{n+1}) under E_k -> u_{k+1}, g -> u_1."""
    from .presets import TBar
    from .quotients import get_algebra
    rep = Report("iso-R", n_max=n_max)
    T = get_algebra(TBar(field.characteristic))
    C = cpoly_algebra(field)

    def key_to_u(key):
        a, e, b = key
        if a:
            return None
        return _trim([b] + list(e))

    # Delta(E_n) rebuilt from Delta(g), Delta(h) by E_n = [E_{n-1}, h]
    one, g, h = T.one_key, T.gen_key("g"), T.gen_key("h")
    dh = Tensor(T, T, {(one, h): field.one, (h, g): field.one})
    cur = Tensor(T, T, {(g, g): field.one})
    for n in range(n_max + 1):
        if n:
            cur = cur * dh - dh * cur
        got = {}
        ok = True
        for (k1, k2), v in cur.terms.items():
            u1, u2 = key_to_u(k1), key_to_u(k2)
            if u1 is None or u2 is None:
                ok = False
                continue
            got[(u1, u2)] = v
        want = C.coproduct_key(_trim([0] * n + [1]))
        rep.add(f"Delta(E_{n}) = Delta(u_{n + 1})", ok and got == want)
    return rep


def abelianization_check(n_max, field=QQ):
    """a_n -> u_{n+1}/(n+1)! carries the free coproduct onto the commutative one."""
    if field.characteristic != 0:
        raise CharPositive("the abelianization map divides by (n+1)!")
    rep = Report("abelianization", n_max=n_max)
    F = fpoly_algebra(field)
    C = cpoly_algebra(field)

    def image(word):
        e = {}
        coeff = Fraction(1)
        for i in word:
            e[i + 1] = e.get(i + 1, 0) + 1
            coeff /= factorial(i + 1)
        key = _trim([e.get(j, 0) for j in range(1, max(e, default=0) + 1)])
        return key, coeff

    for n in range(n_max + 1):
        got = {}
        for (w1, w2), v in F.coproduct_key((n,)).items():
            k1, c1 = image(w1)
            k2, c2 = image(w2)
            got[(k1, k2)] = field.add(got.get((k1, k2), 0), field.mul(v, field(c1 * c2)))
        got = {k: v for k, v in got.items() if v}
        scale = Fraction(1, factorial(n + 1))
        want = {k: field.mul(v, field(scale)) for k, v in C.coproduct_key(_trim([0] * n + [1])).items()}
        rep.add(f"abelianized Delta(a_{n}) = Delta(u_{n + 1})/{n + 1}!", got == want)
    return rep
