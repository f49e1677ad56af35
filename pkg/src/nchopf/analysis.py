"""Dimensions, growth functions, GK-dimension estimates and skew-primitive spaces."""

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import BoundTooLargeForMemory, DegenerateWindow, InfinitePiece, SpecMismatch
from .linalg import Echelon, kernel, row_space_basis
from .quotients import default_g_range, get_algebra
from .tbar import OreAlgebra
from .vector import Element, add_into

INFINITE = math.inf

PIECE_LIMIT = 20000


def _ore(spec):
    A = get_algebra(spec)
    if not isinstance(A, OreAlgebra):
        raise SpecMismatch(f"{spec.preset} is not one of the quotients of the free algebra")
    return A


def graded_dimension(spec, N, g_cap=None):
    """Dimensions of the graded pieces 0..N.  g_cap bounds the g-exponent for TBar."""
    A = _ore(spec)
    if spec.g_order is None and g_cap is None:
        raise InfinitePiece(f"{spec.preset} has infinite graded pieces; pass g_cap")
    gr = range(g_cap) if spec.g_order is None else None
    return [len(A.basis_of_degree(d, gr)) for d in range(N + 1)]


def dimension(spec):
    """Total dimension; INFINITE unless every generator is nilpotent and g has finite order."""
    A = _ore(spec)
    top = A.max_degree()
    if top is None or spec.g_order is None:
        return INFINITE
    closed = spec.n * spec.p ** (1 + sum(spec.d))
    counted = sum(len(A.basis_of_degree(d)) for d in range(top + 1))
    if counted != closed:
        raise AssertionError(f"enumeration gives {counted}, closed form {closed}")
    return closed


def pbw_dimension_count(spec):
    """Exhaustive count of PBW monomials (None if infinite)."""
    A = _ore(spec)
    top = A.max_degree()
    if top is None or spec.g_order is None:
        return None
    return sum(len(A.basis_of_degree(d)) for d in range(top + 1))


@dataclass
class GrowthTable:
    values: list
    generating_set: str = "span{1, g, h}"
    spec: object = dc_field(default=None, repr=False)

    def d(self, n):
        return self.values[n][1]

    def to_csv(self):
        lines = ["n,d_V"]
        lines.extend(f"{n},{d}" for n, d in self.values)
        return "\n".join(lines) + "\n"


def _series_mul(a, b, N):
    out = [0] * (N + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(N + 1 - i):
            y = b[j]
            if y:
                out[i + j] += x * y
    return out


def _factor(weight, cap, N):
    """1 + t^w + t^{2w} + ... up to exponent cap-1 (cap None: unbounded)."""
    s = [0] * (N + 1)
    e = 0
    while e * weight <= N and (cap is None or e < cap):
        s[e * weight] = 1
        e += 1
    return s


def length_counts(spec, N):
    """Number of PBW monomials of each generator-word length 0..N.

    The length of h^a E_K^{e_K}...E_1^{e_1} g^b is a + sum e_k (k+1) + |b|.
    """
    A = _ore(spec)
    series = [1] + [0] * N
    series = _series_mul(series, _factor(1, A.h_cap, N), N)
    kmax = A.trunc.kmax
    caps = A.trunc.caps
    k = 1
    while k + 1 <= N and (kmax is None or k < kmax):
        cap = caps[k - 1] if k - 1 < len(caps) and caps[k - 1] else None
        series = _series_mul(series, _factor(k + 1, cap, N), N)
        k += 1
    if spec.g_order is not None:
        gs = _factor(1, spec.g_order, N)
    elif spec.localized:
        gs = [1] + [2] * N
    else:
        gs = _factor(1, None, N)
    return _series_mul(series, gs, N)


def growth_function(spec, N):
    counts = length_counts(spec, N)
    vals = []
    total = 0
    for n, c in enumerate(counts):
        total += c
        vals.append((n, total))
    gens = "span{1, g, g^-1, h}" if spec.localized else "span{1, g, h}"
    return GrowthTable(vals, gens, spec)


def growth_by_normal_forms(spec, N):
    """d_V(n) for n <= N as the rank of normal forms of all words of length <= n."""
    from .quotients import get_rewriter
    from .rewriting import G, GI, H
    R = get_rewriter(spec)
    A = get_algebra(spec)
    fld = A.field
    letters = [G, H] + ([GI] if spec.localized else [])
    ech = Echelon(fld)
    out = [(0, 1)]
    ech.add({A.one_key: fld.one})
    layer = [()]
    for n in range(1, N + 1):
        layer = [w + (t,) for w in layer for t in letters]
        for w in layer:
            vec = {}
            for s, v in R.normalize({w: fld.one}).items():
                key = A.normalize_key(*R.seq_to_key(s))
                if key is not None:
                    add_into(vec, {key: v}, fld)
            ech.add(vec)
        out.append((n, ech.rank))
    return out


@dataclass(frozen=True)
class GKEstimate:
    value: Fraction
    residual: float
    window: tuple
    points: int

    def __float__(self):
        return float(self.value)


def gk_estimate(table, window):
    """Least-squares slope of log d_V(n) against log n over the window."""
    lo, hi = window
    if lo < 2 or hi <= lo:
        raise DegenerateWindow(f"window {window} needs hi > lo >= 2")
    pts = [(math.log(n), math.log(d)) for n, d in table.values if lo <= n <= hi and d > 0]
    if len(pts) < 2:
        raise DegenerateWindow(f"window {window} holds fewer than two table points")
    m = len(pts)
    mx = sum(x for x, _ in pts) / m
    my = sum(y for _, y in pts) / m
    sxx = sum((x - mx) ** 2 for x, _ in pts)
    if sxx == 0:
        raise DegenerateWindow("window has no spread in n")
    slope = sum((x - mx) * (y - my) for x, y in pts) / sxx
    icpt = my - slope * mx
    resid = math.sqrt(sum((y - icpt - slope * x) ** 2 for x, y in pts) / m)
    return GKEstimate(Fraction(slope).limit_denominator(10 ** 6), resid, (lo, hi), m)


# skew-primitive spaces

def _grouplike_exponent(A, a):
    if isinstance(a, int):
        return a
    if isinstance(a, Element) and len(a.terms) == 1:
        (key, c), = a.terms.items()
        if key[0] == 0 and not key[1] and c == A.field.one:
            return key[2]
    raise SpecMismatch(f"{a} is not a power of g")


def _staged_kernel(A, keys, d, extra, order):
    """Kernel of the linear map given by coproduct components, imposed one left-degree at a time.

    extra(ell, key) returns the terms to subtract in component ell.
    """
    fld = A.field
    combos = [{i: fld.one} for i in range(len(keys))]
    comp_cache = {}
    for ell in order:
        if not combos:
            break
        imgs = []
        for combo in combos:
            vec = {}
            for i, c in combo.items():
                ck = (i, ell)
                if ck not in comp_cache:
                    part = dict(A.coproduct_component(keys[i], ell))
                    for t, v in extra(ell, keys[i]).items():
                        add_into(part, {t: fld.neg(v)}, fld)
                    comp_cache[ck] = part
                add_into(vec, comp_cache[ck], fld, c)
            imgs.append(vec)
        ker = kernel(imgs, fld)
        new = []
        for kv in ker:
            acc = {}
            for j, c in kv.items():
                add_into(acc, combos[j], fld, c)
            if acc:
                new.append(acc)
        combos = new
    return combos


def skew_primitives(spec, a, b, degree_bound):
    """Basis of {c : Delta(c) = a (x) c + c (x) b} among elements of degree <= degree_bound."""
    A = _ore(spec)
    fld = A.field
    ea, eb = _grouplike_exponent(A, a), _grouplike_exponent(A, b)
    ka = A.normalize_key(0, (), ea)
    kb = A.normalize_key(0, (), eb)
    top = A.max_degree()
    bound = degree_bound if top is None else min(degree_bound, top)
    grange = default_g_range(spec)
    found = []
    for d in range(bound + 1):
        keys = A.basis_of_degree(d, grange)
        if len(keys) > PIECE_LIMIT:
            raise BoundTooLargeForMemory(f"degree {d} piece has {len(keys)} monomials")

        def extra(ell, key, d=d):
            out = {}
            if ell == 0:
                out[(ka, key)] = fld.one
            if ell == d:
                add_into(out, {(key, kb): fld.one}, fld)
            return out

        order = [0, d] + [x for i in range(1, d) for x in (i, d - i) if x != 0 and x != d]
        seen = []
        for x in order:
            if x not in seen:
                seen.append(x)
        for combo in _staged_kernel(A, keys, d, extra, seen):
            found.append({keys[i]: c for i, c in combo.items()})
    basis = row_space_basis([_ordered(A, v) for v in found], fld)
    return [Element(A, {_unorder(A, k): v for k, v in vec.items()}) for vec in basis]


def _ordered(A, terms):
    # reindex keys by their sort position so pivots follow the monomial order
    return {(A.sort_key(k), k): v for k, v in terms.items()}


def _unorder(A, k):
    return k[1]


def check_skew_primitive(spec, c, a, b):
    """Delta(c) == a (x) c + c (x) b by direct substitution."""
    A = _ore(spec)
    ga = A.g(_grouplike_exponent(A, a))
    gb = A.g(_grouplike_exponent(A, b))
    from .vector import Tensor
    return A.coproduct(c) == Tensor.pure(ga, c) + Tensor.pure(c, gb)


def coradical_first_term(spec, degree_bound):
    """Basis of C_1 = Delta^{-1}(C_0 (x) A + A (x) C_0) up to degree_bound, with C_0 = span of g-powers."""
    A = _ore(spec)
    fld = A.field
    top = A.max_degree()
    bound = degree_bound if top is None else min(degree_bound, top)
    grange = default_g_range(spec)
    found = []
    for d in range(bound + 1):
        keys = A.basis_of_degree(d, grange)
        if d <= 1:
            found.extend({k: fld.one} for k in keys)
            continue
        order = list(range(1, d))
        for combo in _staged_kernel(A, keys, d, lambda ell, key: {}, order):
            found.append({keys[i]: c for i, c in combo.items()})
    basis = row_space_basis([_ordered(A, v) for v in found], fld)
    return [Element(A, {_unorder(A, k): v for k, v in vec.items()}) for vec in basis]


def span_rank(elements):
    if not elements:
        return 0
    fld = elements[0].field
    e = Echelon(fld)
    for x in elements:
        e.add(dict(x.terms))
    return e.rank


def same_span(xs, ys):
    """True if the two lists of elements span the same subspace."""
    r = span_rank(list(xs) + list(ys))
    return r == span_rank(xs) == span_rank(ys)
