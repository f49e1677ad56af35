"""Change of variables x = g, y = h, x_m = E_m g^-1, z_n = x_n - ((n+1)!/2^n) x_1^n,
the weight filtration it defines, its associated graded algebra, and the c_{n,k} table.

Coordinates: a key (r, s, t) stands for y^r z_K^{s_K} ... z_2^{s_2} x_1^{s_1} x^t,
with s = (s_1, s_2, ..., s_K).  Its weight is r + s_1 + sum (k-1) s_k.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import CharTooSmall, IndexOutOfRange, SpecMismatch
from .linalg import Echelon
from .quotients import default_g_range, get_algebra
from .report import Report
from .tbar import OreAlgebra, _trim
from .vector import Element, Tensor, add_into


def z_coefficient(n):
    return Fraction(factorial(n + 1), 2 ** n)


def weight(zkey):
    r, s, _ = zkey
    w = r
    for i, e in enumerate(s):
        w += e if i == 0 else i * e
    return w


@dataclass(frozen=True)
class FiltrationSpec:
    family: str = "Ff"
    bound: int = 3


class ZCoordinates:
    """Conversion between the PBW basis h^a E^e g^b and the z-monomials."""

    def __init__(self, spec):
        A = get_algebra(spec)
        if not isinstance(A, OreAlgebra) or not (spec.localized or spec.g_order):
            raise SpecMismatch("z-coordinates need an Ore preset with g invertible")
        self.spec = spec
        self.A = A
        self.field = A.field
        p = spec.characteristic
        self.top = None if A.trunc.kmax is None else A.trunc.kmax - 1
        if p and p <= 2:
            raise CharTooSmall("z_n needs 2 invertible")
        self._from = {}
        self._to = {}
        self._zgen = {}

    def _tnorm(self, t):
        return t % self.spec.g_order if self.spec.g_order else t

    def x(self, power=1):
        return self.A.g(power)

    def y(self):
        return self.A.h()

    def x_m(self, m):
        if m == 0:
            return self.A.one()
        return self.A.E(m) * self.A.g(-1)

    def z(self, n):
        """z_n as an algebra element (z_0 = z_1 = 0)."""
        if n in self._zgen:
            return self._zgen[n]
        if n <= 1:
            res = self.A.zero()
        else:
            c = self.field(z_coefficient(n))
            res = self.x_m(n) - self.x_m(1) ** n * c
        self._zgen[n] = res
        return res

    def from_z_key(self, zkey):
        hit = self._from.get(zkey)
        if hit is not None:
            return hit
        r, s, t = zkey
        A = self.A
        res = A.h() ** r if r else A.one()
        for k in range(len(s), 1, -1):
            if s[k - 1]:
                res = res * self.z(k) ** s[k - 1]
        if s and s[0]:
            res = res * self.x_m(1) ** s[0]
        if t:
            res = res * A.g(t)
        self._from[zkey] = res
        return res

    def from_z(self, terms):
        acc = {}
        for k, v in terms.items():
            add_into(acc, self.from_z_key(k).terms, self.field, v)
        return Element(self.A, acc)

    def lead_z_key(self, key):
        a, e, b = key
        return (a, tuple(e), self._tnorm(b + sum(e)))

    def to_z_key(self, key):
        """z-coordinates of one PBW monomial (triangular solve)."""
        hit = self._to.get(key)
        if hit is not None:
            return hit
        fld = self.field
        lead = self.lead_z_key(key)
        img = self.from_z_key(lead)
        if img.terms.get(key) != fld.one:
            raise SpecMismatch(f"z-monomial {lead} does not lead with {key}")
        res = {lead: fld.one}
        for k, v in img.terms.items():
            if k == key:
                continue
            add_into(res, self.to_z_key(k), fld, fld.neg(v))
        self._to[key] = res
        return res

    def to_z(self, x):
        acc = {}
        for k, v in x.terms.items():
            add_into(acc, self.to_z_key(k), self.field, v)
        return acc

    def tensor_to_z(self, t):
        fld = self.field
        acc = {}
        for (k1, k2), v in t.terms.items():
            z1 = self.to_z_key(k1)
            z2 = self.to_z_key(k2)
            for a, c1 in z1.items():
                for b, c2 in z2.items():
                    add_into(acc, {(a, b): fld.mul(c1, c2)}, fld, v)
        return acc

    def z_keys(self, max_weight, degree_cap=None):
        """All basis z-monomials of weight <= max_weight (for infinite presets
        also N-degree <= degree_cap)."""
        A = self.A
        out = []
        top = A.max_degree()
        cap = top if top is not None else degree_cap
        for d in range(cap + 1):
            for key in A.basis_of_degree(d, default_g_range(self.spec)):
                zk = self.lead_z_key(key)
                if weight(zk) <= max_weight:
                    out.append(zk)
        return out

    def format_z_key(self, zkey):
        r, s, t = zkey
        parts = []
        if r:
            parts.append("y" if r == 1 else f"y^{r}")
        for k in range(len(s), 1, -1):
            if s[k - 1]:
                parts.append(f"z{k}" if s[k - 1] == 1 else f"z{k}^{s[k - 1]}")
        if s and s[0]:
            parts.append("x1" if s[0] == 1 else f"x1^{s[0]}")
        if t:
            parts.append("x" if t == 1 else f"x^{t}")
        return "*".join(parts) if parts else "1"

    def format_z(self, terms):
        from .vector import format_terms
        items = sorted(terms.items(), key=lambda kv: (weight(kv[0]), kv[0]))
        return format_terms(self.field, items, self.format_z_key)

    # associated graded

    def gr_mul(self, z1, z2):
        """Associated graded product of two z-monomials: top-weight part of the product."""
        w = weight(z1) + weight(z2)
        prod = self.to_z(self.from_z_key(z1) * self.from_z_key(z2))
        return {k: v for k, v in prod.items() if weight(k) == w}

    def gr_mul_terms(self, a, b):
        fld = self.field
        acc = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                add_into(acc, self.gr_mul(k1, k2), fld, fld.mul(v1, v2))
        return acc

    def gr_coproduct(self, zterms):
        """Associated graded coproduct of a weight-homogeneous combination."""
        out = {}
        fld = self.field
        for zk, v in zterms.items():
            w = weight(zk)
            t = self.tensor_to_z(self.A.coproduct(self.from_z_key(zk)))
            for (a, b), c in t.items():
                if weight(a) + weight(b) == w:
                    add_into(out, {(a, b): c}, fld, v)
        return out

    def zgen(self, name, k=None):
        """Coordinates of a single generator: 'x', 'y', 'x1' or ('z', n)."""
        d = self._slen()
        if name == "x":
            return {(0, (), self._tnorm(1)): self.field.one}
        if name == "xinv":
            return {(0, (), self._tnorm(-1)): self.field.one}
        if name == "y":
            return {(1, (), 0): self.field.one}
        if name == "x1":
            return {(0, (1,), 0): self.field.one}
        if name == "z":
            if k < 2 or (d is not None and k > d):
                return {}
            return {(0, _trim([0] * (k - 1) + [1]), 0): self.field.one}
        raise SpecMismatch(name)

    def _slen(self):
        return self.top


def _sub(fld, a, b):
    out = dict(a)
    add_into(out, b, fld, fld.neg(fld.one))
    return out


def _scale(fld, a, c):
    return {k: fld.mul(v, c) for k, v in a.items() if fld.mul(v, c)}


def _fmt(zc, terms):
    return zc.format_z(terms) if terms else "0"


# filtration


def filtration_check(spec, fspec=FiltrationSpec()):
    """Algebra, coalgebra and antipode containments of the weight filtration up to fspec.bound."""
    zc = ZCoordinates(spec)
    A, fld = zc.A, zc.field
    bound = fspec.bound
    rep = Report("filtration", spec=spec.label(), family=fspec.family, bound=bound)
    if fspec.family not in ("Ff", "Fpm", "Ffdb"):
        raise SpecMismatch(f"unknown filtration family {fspec.family}")
    rep.add("cop convention: Delta(y) = y (x) 1 + x (x) y", spec.cop and
            A.coproduct(A.h()) == Tensor.pure(A.h(), A.one()) + Tensor.pure(A.g(), A.h()))
    degree_cap = bound * 2 + 2 if A.max_degree() is None else None
    keys = zc.z_keys(bound, degree_cap)
    if fspec.family == "Ffdb":
        keys = [k for k in keys if k[0] == 0]
    by_w = {}
    for k in keys:
        by_w.setdefault(weight(k), []).append(k)
    rep.note(f"{len(keys)} z-monomials of weight <= {bound}")

    f0 = by_w.get(0, [])
    grouplike = all(k[0] == 0 and not k[1] for k in f0)
    rep.add("F_0 is spanned by the powers of x", grouplike and len(f0) == len(list(default_g_range(spec))))

    alg_ok, bad = True, None
    for k1 in keys:
        for k2 in keys:
            w = weight(k1) + weight(k2)
            if w > bound:
                continue
            prod = zc.to_z(zc.from_z_key(k1) * zc.from_z_key(k2))
            if any(weight(k) > w for k in prod):
                alg_ok, bad = False, (zc.format_z_key(k1), zc.format_z_key(k2))
                break
        if not alg_ok:
            break
    rep.add("F_m F_n in F_(m+n)", alg_ok, witness=bad)

    co_ok, bad = True, None
    for k in keys:
        w = weight(k)
        t = zc.tensor_to_z(A.coproduct(zc.from_z_key(k)))
        if any(weight(a) + weight(b) > w for a, b in t):
            co_ok, bad = False, zc.format_z_key(k)
            break
    rep.add("Delta(F_n) in sum F_(n-l) (x) F_l", co_ok, witness=bad)

    if spec.is_hopf:
        an_ok, bad = True, None
        for k in keys:
            s = zc.to_z(A.antipode(zc.from_z_key(k)))
            if any(weight(x) > weight(k) for x in s):
                an_ok, bad = False, zc.format_z_key(k)
                break
        rep.add("S(F_n) in F_n", an_ok, witness=bad)

    x1, y, z2 = zc.zgen("x1"), zc.zgen("y"), zc.zgen("z", 2)
    lhs = zc.to_z(zc.from_z(x1) * zc.from_z(y) - zc.from_z(y) * zc.from_z(x1))
    half = fld(Fraction(1, 2))
    rhs = dict(_scale(fld, zc.to_z(zc.from_z(x1) ** 2), half))
    add_into(rhs, z2, fld)
    diff = _sub(fld, lhs, rhs)
    rep.add("[x1, y] = 1/2 x1^2 + z2", not diff, witness=_fmt(zc, diff))
    return rep


def wedge_consistency_check(spec):
    """F_1 equals C_1 = Delta^-1(C_0 (x) A + A (x) C_0) computed from the coproduct alone."""
    from .analysis import coradical_first_term, same_span
    zc = ZCoordinates(spec)
    A = zc.A
    rep = Report("wedge", spec=spec.label())
    top = A.max_degree()
    bound = top if top is not None else 4
    c1 = coradical_first_term(spec, bound)
    f1 = [zc.from_z_key(k) for k in zc.z_keys(1, bound)]
    rep.add("F_1 = C_0 wedge C_0", same_span(c1, f1), dim_C1=len(c1), dim_F1=len(f1))
    return rep


# associated graded relations


def _bracket(zc, a, b):
    return _sub(zc.field, zc.gr_mul_terms(a, b), zc.gr_mul_terms(b, a))


def _power(zc, a, n):
    res = {(0, (), 0): zc.field.one}
    for _ in range(n):
        res = zc.gr_mul_terms(res, a)
    return res


def gr_relations_check(spec, bound=None):
    """Relations, action and coaction of the associated graded Hopf algebra of the weight filtration."""
    p = spec.characteristic
    if p != 0 and p < 3:
        raise CharTooSmall("the associated graded relations need char 0 or char >= 3")
    zc = ZCoordinates(spec)
    A, fld = zc.A, zc.field
    rep = Report("gr-relations", spec=spec.label(), bound=bound)
    if not spec.cop:
        rep.note("spec is not cop; relations are stated for the co-opposite coproduct")
    top = zc.top
    if top is None:
        top = (bound or 4) + 1
    nmax = top if p == 0 else p - 2
    x, xinv, y, x1 = zc.zgen("x"), zc.zgen("xinv"), zc.zgen("y"), zc.zgen("x1")
    z = {n: zc.zgen("z", n) for n in range(2, nmax + 2)}
    half = fld(Fraction(1, 2))

    def check(name, lhs, rhs):
        d = _sub(fld, lhs, rhs)
        rep.add(name, not d, witness=_fmt(zc, d))

    check("[x1, y] = 1/2 x1^2", _bracket(zc, x1, y), _scale(fld, _power(zc, x1, 2), half))
    check("[x, y] = x1 x", _bracket(zc, x, y), zc.gr_mul_terms(x1, x))
    check("[x, x1] = 0", _bracket(zc, x, x1), {})
    if p == 3:
        check("x1^3 = 0", _power(zc, x1, 3), {})
        check("y^3 = 0", _power(zc, y, 3), {})
    else:
        for n in range(2, nmax + 1):
            c = fld(Fraction(n * factorial(n + 1), 2 ** n))
            rhs = _scale(fld, zc.gr_mul_terms(z[n], x1), fld.neg(fld.one))
            add_into(rhs, zc.gr_mul_terms(z[2], _power(zc, x1, n - 1)), fld, fld.neg(c))
            add_into(rhs, z.get(n + 1, {}), fld)
            check(f"[z{n}, y] = -z{n} x1 - {n}({n}+1)!/2^{n} z2 x1^{n - 1} + z{n + 1}",
                  _bracket(zc, z[n], y), rhs)
            check(f"[x, z{n}] = 0", _bracket(zc, x, z[n]), {})
            check(f"[x1, z{n}] = 0", _bracket(zc, x1, z[n]), {})
            for m in range(n + 1, nmax + 1):
                check(f"[z{n}, z{m}] = 0", _bracket(zc, z[n], z[m]), {})
        if p:
            rep.add(f"z{p - 1} = 0", not zc.to_z(zc.z(p - 1)))
            check(f"x1^{p} = 0", _power(zc, x1, p), {})
            check(f"y^{p} = 0", _power(zc, y, p), {})
            for n in range(2, nmax + 1):
                check(f"z{n}^{p} = 0", _power(zc, z[n], p), {})

    # action of x by conjugation and coaction (pi (x) id) Delta
    def act(u):
        return zc.gr_mul_terms(zc.gr_mul_terms(x, u), xinv)

    check("x . x1 = x1", act(x1), x1)
    yx1 = dict(y)
    add_into(yx1, x1, fld)
    check("x . y = y + x1", act(y), yx1)
    for n in range(2, nmax + 1):
        check(f"x . z{n} = z{n}", act(z[n]), z[n])

    def coaction(u):
        return {(a, b): v for (a, b), v in zc.gr_coproduct(u).items() if weight(a) == 0}

    def x_tensor(power, u):
        xp = (0, (), zc._tnorm(power))
        return {(xp, k): v for k, v in u.items()}

    check("rho(x1) = x (x) x1", coaction(x1), x_tensor(1, x1))
    check("rho(y) = x (x) y", coaction(y), x_tensor(1, y))
    for n in range(2, nmax + 1):
        check(f"rho(z{n}) = x^{n} (x) z{n}", coaction(z[n]), x_tensor(n, z[n]))

    if A.max_degree() is not None and spec.g_order:
        total = sum(len(A.basis_of_degree(d)) for d in range(A.max_degree() + 1))
        coinv = [k for k in zc.z_keys(10 ** 6) if k[2] == 0]
        ech = Echelon(fld)
        for k in coinv:
            ech.add({k: fld.one})
        dim_b = ech.rank
        rep.add(f"dim B = dim / |G| = {total}/{spec.g_order}", dim_b * spec.g_order == total, dim_B=dim_b)
        if p:
            rep.add(f"dim B = p^(p-1) = {p ** (p - 1)}", dim_b == p ** (p - 1), dim_B=dim_b)
        lim = bound if bound is not None else 10 ** 6
        ok, bad = True, None
        for k in coinv:
            if weight(k) > lim:
                continue
            right = {(a, b): v for (a, b), v in zc.gr_coproduct({k: fld.one}).items() if weight(b) == 0}
            if right != {(k, (0, (), 0)): fld.one}:
                ok, bad = False, zc.format_z_key(k)
                break
        rep.add("z-monomials without x are right coinvariants", ok, witness=bad)
    return rep


# c_{n,k}


def c_coefficients(n_max):
    """Table c[(n, k)] for 2 <= n <= n_max, 1 <= k <= n+1 from the recursion."""
    if n_max < 2:
        raise IndexOutOfRange("n_max must be at least 2")
    c = {(2, 1): Fraction(0), (2, 2): Fraction(1), (2, 3): Fraction(0)}
    for n in range(3, n_max + 1):
        c[(n, 1)] = Fraction(0)
        c[(n, n + 1)] = Fraction(0)
        c[(n, n)] = Fraction(1)
        for k in range(2, n):
            c[(n, k)] = c[(n - 1, k - 1)] - Fraction(n - 1 + k, 2) * c[(n - 1, k)]
    return c


def c_closed_form(n, k):
    prod = 1
    for j in range(k + 2, n + 2):
        prod *= j
    return Fraction(-1, 2) ** (n - k) * comb(n - 2, k - 2) * prod


def c_coefficients_check(n_max):
    rep = Report("c-coefficients", n_max=n_max)
    c = c_coefficients(n_max)
    bad = [(n, k) for n in range(3, n_max + 1) for k in range(2, n) if c[(n, k)] != c_closed_form(n, k)]
    rep.add("recursion equals closed form for 2 <= k <= n-1", not bad, witness=bad[:5])
    return rep


def braided_coproduct(zc, u):
    """Coproduct of the coinvariant part: b_(1) S(pi(b_(2))) (x) b_(3) in the associated graded."""
    fld = zc.field
    out = {}
    for (a, b), v in zc.gr_coproduct(u).items():
        for (a1, a2), w in zc.gr_coproduct({a: fld.one}).items():
            if weight(a2) != 0:
                continue
            # pi(a2) = x^t; S(x^t) = x^-t sits to the right of a1
            r, s, t1 = a1
            key = (r, s, zc._tnorm(t1 - a2[2]))
            add_into(out, {(key, b): fld.mul(v, w)}, fld)
    return out


def z_prime_coproduct_check(spec, n_max):
    """z'_n by the bracket recursion against its closed form, and the coproduct formula with c_{n,k}."""
    zc = ZCoordinates(spec)
    fld = zc.field
    p = spec.characteristic
    limit = p - 2 if p else None
    if n_max < 2 or (limit is not None and n_max > limit):
        raise IndexOutOfRange(f"n_max must lie in 2..{limit if limit else 'inf'}")
    rep = Report("z-prime", spec=spec.label(), n_max=n_max)
    y, x1 = zc.zgen("y"), zc.zgen("x1")
    z = {n: zc.zgen("z", n) for n in range(0, n_max + 1)}
    zp = {2: dict(z[2])}
    for n in range(2, n_max):
        zp[n + 1] = _bracket(zc, y, zp[n])
    x1sq = _power(zc, x1, 2)
    for n in range(2, n_max + 1):
        closed = dict(z[n])
        add_into(closed, zc.gr_mul_terms(z[n - 1], x1), fld, fld(-(n + 1)))
        add_into(closed, zc.gr_mul_terms(z[n - 2], x1sq), fld, fld(Fraction(n * (n + 1), 2)))
        closed = _scale(fld, closed, fld((-1) ** n))
        d = _sub(fld, zp[n], closed)
        rep.add(f"z'_{n} bracket recursion = closed form", not d,
                witness=f"recursion {_fmt(zc, zp[n])}; closed form {_fmt(zc, closed)}",
                recursion=_fmt(zc, zp[n]))
    c = c_coefficients(max(n_max, 2))
    one = (0, (), 0)
    for n in range(2, n_max + 1):
        got = braided_coproduct(zc, zp[n])
        want = {(k, one): v for k, v in zp[n].items()}
        for k in range(2, n + 1):
            coef = fld(c[(n, k)])
            if not coef:
                continue
            left = _power(zc, x1, n - k)
            for a, va in left.items():
                for b, vb in zp[k].items():
                    add_into(want, {(a, b): fld.mul(va, vb)}, fld, coef)
        d = _sub(fld, got, want)
        rep.add(f"Delta(z'_{n}) = z'_{n} (x) 1 + sum c_({n},k) x1^({n}-k) (x) z'_k", not d,
                witness=f"{len(d)} differing terms")
    return rep
