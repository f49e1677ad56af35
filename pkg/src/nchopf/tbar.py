"""Fast arithmetic for the quotient family as an Ore extension R[h; delta].

R is the commutative algebra generated by g (or g^{+-1}) and E_1, E_2, ...,
and delta = ad_r h acts by delta(g) = E_1, delta(E_k) = E_{k+1}.  A basis key
(a, exps, b) stands for h^a * E_K^{e_K} ... E_1^{e_1} * g^b with
exps = (e_1, ..., e_K) carrying no trailing zeros.
"""

from functools import lru_cache

from .errors import IllegalGenerator, NotHopf
from .fdb_core import bell_int
from .scalars import binomial
from .vector import AlgebraBase, Element, Tensor, add_into

ONE = (0, (), 0)


def exps_add(e, f):
    if len(e) < len(f):
        e, f = f, e
    out = list(e)
    for i, x in enumerate(f):
        out[i] += x
    return tuple(out)


def exps_unit(k, e=1):
    out = [0] * k
    out[k - 1] = e
    return tuple(out)


def _trim(lst):
    while lst and lst[-1] == 0:
        lst.pop()
    return tuple(lst)


def e_degree(exps):
    return sum((i + 1) * x for i, x in enumerate(exps))


def e_count(exps):
    return sum(exps)


class Truncation:
    """kmax: E_k = 0 for k >= kmax; caps[k-1]: E_k^{caps[k-1]} = 0 (0: none)."""

    def __init__(self, kmax=None, caps=()):
        self.kmax = kmax
        self.caps = tuple(caps)

    def key(self):
        return (self.kmax, self.caps)

    def ok(self, exps):
        if self.kmax is not None and len(exps) >= self.kmax:
            return False
        for c, x in zip(self.caps, exps):
            if c and x >= c:
                return False
        return True


@lru_cache(maxsize=None)
def _delta_once(r, trunc_key):
    """delta(E^exps g^b) over the integers, truncated."""
    exps, b = r
    kmax, caps = trunc_key
    out = {}

    def put(e, bb, c):
        e = _trim(e)
        if kmax is not None and len(e) >= kmax:
            return
        for cap, x in zip(caps, e):
            if cap and x >= cap:
                return
        k = (e, bb)
        out[k] = out.get(k, 0) + c

    for i, x in enumerate(exps):
        if x:
            e = list(exps) + [0]
            e[i] -= 1
            e[i + 1] += 1
            put(e, b, x)
    if b:
        e = list(exps) or [0]
        e[0] += 1
        put(e, b - 1, b)
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def delta_power(r, j, trunc_key):
    if j == 0:
        return {r: 1}
    prev = delta_power(r, j - 1, trunc_key)
    out = {}
    for s, c in prev.items():
        for t, v in _delta_once(s, trunc_key).items():
            out[t] = out.get(t, 0) + c * v
    return {k: v for k, v in out.items() if v}


class OreAlgebra(AlgebraBase):
    """Arithmetic, coproduct, counit and antipode for one Ore-type preset."""

    one_key = ONE

    def __init__(self, spec):
        self.spec = spec
        self.field = spec.field
        self.trunc = Truncation(spec.kmax, spec.e_caps)
        self.tkey = self.trunc.key()
        self.n = spec.g_order
        self.h_cap = spec.h_cap
        self.localized = spec.localized
        self.cop = spec.cop
        self._mul_cache = {}
        self._cop_cache = {}
        self._hpow_cache = {}
        self._rcop_cache = {}
        self._anti_cache = {}

    def __eq__(self, other):
        return isinstance(other, OreAlgebra) and other.spec == self.spec

    def __hash__(self):
        return hash(("ore", self.spec))

    def __repr__(self):
        return f"OreAlgebra{self.spec.label()}"

    # keys

    def normalize_key(self, a, exps, b):
        """Canonical key or None if the monomial vanishes."""
        exps = _trim(list(exps))
        if self.h_cap is not None and a >= self.h_cap:
            return None
        if not self.trunc.ok(exps):
            return None
        if self.n is not None:
            b %= self.n
        elif b < 0 and not self.localized:
            raise IllegalGenerator("negative powers of g need a localized preset")
        return (a, exps, b)

    def degree(self, key):
        return key[0] + e_degree(key[1])

    def word_length(self, key):
        return key[0] + sum((i + 2) * x for i, x in enumerate(key[1])) + abs(key[2])

    def sort_key(self, key):
        a, e, b = key
        return (self.degree(key), -a, tuple(-x for x in reversed(e)), len(e), b)

    def format_key(self, key):
        a, e, b = key
        parts = []
        if a:
            parts.append("h" if a == 1 else f"h^{a}")
        for k in range(len(e), 0, -1):
            x = e[k - 1]
            if x:
                parts.append(f"E({k})" if x == 1 else f"E({k})^{x}")
        if b:
            parts.append("g" if b == 1 else f"g^{b}")
        return "*".join(parts) if parts else "1"

    def gen_key(self, name, k=None):
        if name == "h":
            return self.normalize_key(1, (), 0)
        if name == "g":
            return self.normalize_key(0, (), 1)
        if name == "G":
            if not self.localized and self.n is None:
                raise IllegalGenerator("g^-1 needs a localized preset or g^n = 1")
            return self.normalize_key(0, (), -1)
        if name == "E":
            if k == 0:
                return self.normalize_key(0, (), 1)
            return self.normalize_key(0, exps_unit(k), 0)
        raise IllegalGenerator(f"unknown generator {name}")

    def gen(self, name, k=None):
        key = self.gen_key(name, k)
        return self.zero() if key is None else self.monomial(key)

    def h(self):
        return self.gen("h")

    def g(self, power=1):
        key = self.normalize_key(0, (), power)
        return self.monomial(key)

    def E(self, k):
        return self.gen("E", k)

    # product

    def mono_mul(self, k1, k2):
        ck = (k1, k2)
        hit = self._mul_cache.get(ck)
        if hit is not None:
            return hit
        a, e, c = k1
        b, f, d = k2
        fld = self.field
        out = {}
        for j in range(b + 1):
            na = a + b - j
            if self.h_cap is not None and na >= self.h_cap:
                continue
            cb = binomial(b, j)
            for (e2, c2), v in delta_power((e, c), j, self.tkey).items():
                key = self.normalize_key(na, exps_add(e2, f), c2 + d)
                if key is None:
                    continue
                out[key] = out.get(key, 0) + cb * v
        res = {}
        for k, v in out.items():
            v = fld.from_int(v)
            if v:
                res[k] = v
        if len(self._mul_cache) > 500000:
            self._mul_cache.clear()
        self._mul_cache[ck] = res
        return res

    def r_mul(self, k1, r):
        """Right multiplication of a basis key by an R-monomial (exps, b)."""
        a, e, c = k1
        return self.normalize_key(a, exps_add(e, r[0]), c + r[1])

    # coalgebra

    def counit_key(self, key):
        return self.field.one if key[0] == 0 and not key[1] else self.field.zero

    def _gen_cop_E(self, k):
        """Delta(E_k) = sum_r E_r (x) B_{k+1,r+1}(g, E_1, E_2, ...) as R (x) R pairs."""
        out = {}
        for r in range(k + 1):
            left = ((), 1) if r == 0 else (exps_unit(r), 0)
            if not self.trunc.ok(left[0]):
                continue
            for t, v in bell_int(k + 1, r + 1).items():
                right_e = _trim(list(t[1:]))
                if not self.trunc.ok(right_e):
                    continue
                key = (left, (right_e, t[0]))
                out[key] = out.get(key, 0) + v
        return out

    def _r_tensor_mul(self, x, y):
        acc = {}
        for (l1, r1), v in x.items():
            for (l2, r2), w in y.items():
                le = exps_add(l1[0], l2[0])
                re = exps_add(r1[0], r2[0])
                if not (self.trunc.ok(le) and self.trunc.ok(re)):
                    continue
                key = ((le, l1[1] + l2[1]), (re, r1[1] + r2[1]))
                acc[key] = acc.get(key, 0) + v * w
        return {k: v for k, v in acc.items() if v}

    def _r_coproduct(self, exps):
        """Delta(E^exps) over the integers, keys ((exps, b), (exps, b))."""
        hit = self._rcop_cache.get(exps)
        if hit is not None:
            return hit
        if not exps:
            res = {(((), 0), ((), 0)): 1}
        else:
            k = len(exps)
            rest = _trim(list(exps[:-1]) + [exps[-1] - 1])
            res = self._r_tensor_mul(self._r_coproduct(rest), self._gen_cop_E(k))
        if len(self._rcop_cache) > 20000:
            self._rcop_cache.clear()
        self._rcop_cache[exps] = res
        return res

    def _h_power_coproduct(self, a):
        """Delta(h^a) as a field-valued dict of key pairs."""
        hit = self._hpow_cache.get(a)
        if hit is not None:
            return hit
        fld = self.field
        if a == 0:
            res = {(ONE, ONE): fld.one}
        else:
            prev = self._h_power_coproduct(a - 1)
            hk = self.gen_key("h")
            gk = self.gen_key("g")
            res = {}
            for (x, y), v in prev.items():
                # (x (x) y)(1 (x) h + h (x) g)
                for k2, c2 in self.mono_mul(y, hk).items():
                    add_into(res, {(x, k2): c2}, fld, v)
                for k1, c1 in self.mono_mul(x, hk).items():
                    for k2, c2 in self.mono_mul(y, gk).items():
                        add_into(res, {(k1, k2): fld.mul(c1, c2)}, fld, v)
        self._hpow_cache[a] = res
        return res

    def _coproduct_raw(self, key, left_degree=None):
        a, e, b = key
        fld = self.field
        hc = self._h_power_coproduct(a)
        rc = self._r_coproduct(e)
        out = {}
        for (x, y), v in hc.items():
            dx = x[0] + e_degree(x[1])
            if left_degree is not None and dx > left_degree:
                continue
            for ((l_e, l_b), (r_e, r_b)), w in rc.items():
                if left_degree is not None and dx + e_degree(l_e) != left_degree:
                    continue
                k1 = self.normalize_key(x[0], exps_add(x[1], l_e), x[2] + l_b + b)
                if k1 is None:
                    continue
                k2 = self.normalize_key(y[0], exps_add(y[1], r_e), y[2] + r_b + b)
                if k2 is None:
                    continue
                kk = (k1, k2)
                nv = fld.add(out.get(kk, 0), fld.mul(v, fld.from_int(w)))
                if nv:
                    out[kk] = nv
                else:
                    out.pop(kk, None)
        return out

    def coproduct_key(self, key):
        """Delta of a basis key (flipped when the spec is cop)."""
        hit = self._cop_cache.get(key)
        if hit is not None:
            return hit
        res = self._coproduct_raw(key)
        if self.cop:
            res = {(y, x): v for (x, y), v in res.items()}
        if len(self._cop_cache) > 4000:
            self._cop_cache.clear()
        self._cop_cache[key] = res
        return res

    def coproduct_component(self, key, left_degree):
        """Terms of Delta(key) whose left factor has the given degree."""
        if self.cop:
            d = self.degree(key)
            raw = self._coproduct_raw(key, d - left_degree)
            return {(y, x): v for (x, y), v in raw.items()}
        return self._coproduct_raw(key, left_degree)

    def coproduct(self, x):
        fld = self.field
        acc = {}
        for k, v in x.terms.items():
            add_into(acc, self.coproduct_key(k), fld, v)
        return Tensor(self, self, acc)

    def counit(self, x):
        fld = self.field
        total = fld.zero
        for k, v in x.terms.items():
            if k[0] == 0 and not k[1]:
                total = fld.add(total, v)
        return total

    # antipode

    def _check_hopf(self):
        if not (self.localized or self.n is not None):
            raise NotHopf(f"{self.spec.preset} does not admit an antipode (g is not invertible)")

    def antipode_gen(self, name, k=None):
        """S (or S^{-1} for cop specs) of a generator."""
        self._check_hopf()
        ck = (name, k)
        if ck in self._anti_cache:
            return self._anti_cache[ck]
        ginv = self.g(-1)
        h = self.h()
        if name == "g":
            res = ginv
        elif name == "G":
            res = self.g(1)
        elif name == "h":
            res = -(ginv * h) if self.cop else -(h * ginv)
        elif name == "E":
            if k == 0:
                res = ginv
            else:
                prev = self.antipode_gen("E", k - 1)
                sh = self.antipode_gen("h")
                res = -(prev * sh - sh * prev)
                if self.gen_key("E", k) is None:
                    res = self.zero()
        else:
            raise IllegalGenerator(name)
        self._anti_cache[ck] = res
        return res

    def antipode_key(self, key):
        ck = ("key", key)
        if ck in self._anti_cache:
            return self._anti_cache[ck]
        self._check_hopf()
        a, e, b = key
        # S is an anti-homomorphism: reverse h^a E... g^b
        res = self.g(-b) if b else self.one()
        for k in range(1, len(e) + 1):
            if e[k - 1]:
                res = res * self.antipode_gen("E", k) ** e[k - 1]
        if a:
            res = res * self.antipode_gen("h") ** a
        self._anti_cache[ck] = res
        return res

    def antipode(self, x):
        fld = self.field
        acc = {}
        for k, v in x.terms.items():
            add_into(acc, self.antipode_key(k).terms, fld, v)
        return Element(self, acc)

    # basis enumeration

    def e_index_bound(self, degree):
        kb = degree if self.trunc.kmax is None else min(degree, self.trunc.kmax - 1)
        return kb

    def r_exps_of_degree(self, degree):
        """All truncation-legal exps with E-degree exactly `degree`."""
        kb = self.e_index_bound(degree)
        out = []

        def rec(k, remaining, acc):
            if k == 0:
                if remaining == 0:
                    out.append(_trim(list(acc)))
                return
            cap = self.trunc.caps[k - 1] if k - 1 < len(self.trunc.caps) and self.trunc.caps[k - 1] else None
            m = remaining // k
            if cap is not None:
                m = min(m, cap - 1)
            for x in range(m, -1, -1):
                acc[k - 1] = x
                rec(k - 1, remaining - k * x, acc)
            acc[k - 1] = 0

        rec(kb, degree, [0] * kb)
        return out

    def g_range(self, g_range=None):
        if self.n is not None:
            return range(self.n)
        if g_range is None:
            from .errors import InfinitePiece
            raise InfinitePiece(f"{self.spec.preset} has infinite graded pieces; pass a g-range")
        return g_range

    def basis_of_degree(self, degree, g_range=None):
        keys = []
        gs = self.g_range(g_range)
        amax = degree if self.h_cap is None else min(degree, self.h_cap - 1)
        for a in range(amax, -1, -1):
            for e in self.r_exps_of_degree(degree - a):
                for b in gs:
                    keys.append((a, e, b))
        return keys

    def max_degree(self):
        """Top degree for finite-dimensional presets, else None."""
        t = self.trunc
        if self.h_cap is None or t.kmax is None:
            return None
        top = self.h_cap - 1
        for k in range(1, t.kmax):
            cap = t.caps[k - 1] if k - 1 < len(t.caps) else 0
            if not cap:
                return None
            top += k * (cap - 1)
        return top
