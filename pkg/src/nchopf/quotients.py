"""Public operations on the quotient presets: normal forms, products, projection
from the free algebra, coproducts, counits, antipodes and verification reports."""

import random
from functools import lru_cache

from .errors import IllegalGenerator, NotHopf, SpecMismatch
from .fdb import cpoly_algebra, fpoly_algebra, weak_compositions
from .fdb_core import bell_int
from .free import pbw_coordinates
from .presets import validate_spec
from .report import Report
from .rewriting import RewriteSystem, describe_overlap, seq_str
from .scalars import Scalar
from .tbar import ONE, OreAlgebra, _trim, e_degree, exps_unit
from .vector import AlgebraBase, Element, Tensor, add_into
from .words import letter_counts


class BFAlgebra(AlgebraBase):
    """Subalgebra generated by omega~_m and E_k; keys (m, exps, b) stand for
    w(m) * E_K^{e_K} ... E_1^{e_1} * g^b, with m = 0 meaning no w factor."""

    one_key = ONE

    def __init__(self, spec):
        self.spec = spec
        self.field = spec.field
        self.rules = RewriteSystem(spec)
        self._mul = {}
        self._cop = {}

    def __eq__(self, other):
        return isinstance(other, BFAlgebra) and other.spec == self.spec

    def __hash__(self):
        return hash(("bf", self.spec))

    def __repr__(self):
        return f"BFAlgebra{self.spec.label()}"

    def degree(self, key):
        return key[0] + e_degree(key[1])

    def token_count(self, key):
        return (1 if key[0] else 0) + sum(key[1]) + key[2]

    def sort_key(self, key):
        m, e, b = key
        return (self.degree(key), -m, tuple(-x for x in reversed(e)), len(e), b)

    def format_key(self, key):
        m, e, b = key
        parts = [f"w({m})"] if m else []
        for k in range(len(e), 0, -1):
            x = e[k - 1]
            if x:
                parts.append(f"E({k})" if x == 1 else f"E({k})^{x}")
        if b:
            parts.append("g" if b == 1 else f"g^{b}")
        return "*".join(parts) if parts else "1"

    def gen_key(self, name, k=None):
        if name == "g" or (name == "E" and k == 0) or (name == "W" and k == 0):
            return (0, (), 1)
        if name == "E":
            return (0, exps_unit(k), 0)
        if name == "W":
            return (k, (), 0)
        raise IllegalGenerator(f"{name} is not a generator of BF")

    def gen(self, name, k=None):
        return self.monomial(self.gen_key(name, k))

    def mono_mul(self, k1, k2):
        ck = (k1, k2)
        hit = self._mul.get(ck)
        if hit is not None:
            return hit
        r = self.rules
        seq = r.key_to_seq(k1) + r.key_to_seq(k2)
        res = {r.seq_to_key(s): v for s, v in r.reduce_memo({seq: self.field.one}).items()}
        self._mul[ck] = res
        return res

    def gen_coproduct(self, name, k):
        """Delta of a generator as a Tensor."""
        fld = self.field
        terms = {}
        if name == "W" and k > 0:
            for j in range(k + 1):
                left = self.gen_key("W", j)
                for comp in weak_compositions(k - j, j + 1):
                    right = self.one()
                    for i in comp:
                        right = right * self.gen("W", i)
                    add_into(terms, {(left, rk): v for rk, v in right.terms.items()}, fld)
        else:
            for r in range(k + 1):
                left = self.gen_key("E", r)
                for t, v in bell_int(k + 1, r + 1).items():
                    right = (0, _trim(list(t[1:])), t[0])
                    add_into(terms, {(left, right): fld.from_int(v)}, fld)
        return Tensor(self, self, terms)

    def coproduct_key(self, key):
        hit = self._cop.get(key)
        if hit is not None:
            return hit
        m, e, b = key
        res = Tensor(self, self, {(ONE, ONE): self.field.one})
        if m:
            res = res * self.gen_coproduct("W", m)
        for k in range(len(e), 0, -1):
            for _ in range(e[k - 1]):
                res = res * self.gen_coproduct("E", k)
        if b:
            gb = (0, (), b)
            res = Tensor(self, self, {(self._rmul(x, gb), self._rmul(y, gb)): v for (x, y), v in res.terms.items()})
        out = res.terms
        if self.spec.cop:
            out = {(y, x): v for (x, y), v in out.items()}
        self._cop[key] = out
        return out

    def _rmul(self, key, gb):
        return (key[0], key[1], key[2] + gb[2])

    def coproduct(self, x):
        acc = {}
        for k, v in x.terms.items():
            add_into(acc, self.coproduct_key(k), self.field, v)
        return Tensor(self, self, acc)

    def counit_key(self, key):
        return self.field.one if key[0] == 0 and not key[1] else self.field.zero

    def counit(self, x):
        f = self.field
        total = f.zero
        for k, v in x.terms.items():
            if k[0] == 0 and not k[1]:
                total = f.add(total, v)
        return total

    def antipode(self, x):
        raise NotHopf("BF is not a Hopf algebra (g is not invertible)")

    def basis_of_degree(self, degree, g_range=range(0, 3)):
        out = []
        probe = OreAlgebra(self.spec.__class__("TBar", self.spec.characteristic))
        for m in range(degree, -1, -1):
            if m == 0:
                for e in probe.r_exps_of_degree(degree):
                    for b in g_range:
                        out.append((0, e, b))
            else:
                for e in probe.r_exps_of_degree(degree - m):
                    for b in g_range:
                        out.append((m, e, b))
        return out


class _CopWrapped:
    """Mixin behaviour for the Faa di Bruno algebras under a spec."""


@lru_cache(maxsize=64)
def get_algebra(spec):
    """The arithmetic object for a spec (does not validate)."""
    if spec.is_ore:
        return OreAlgebra(spec)
    if spec.preset == "BF":
        return BFAlgebra(spec)
    if spec.preset == "BFdB":
        return cpoly_algebra(spec.field, False)
    if spec.preset == "HFdB":
        return cpoly_algebra(spec.field, True)
    if spec.preset == "BFdBnc":
        return fpoly_algebra(spec.field)
    raise SpecMismatch(spec.preset)


@lru_cache(maxsize=64)
def get_rewriter(spec):
    return RewriteSystem(spec)


def _check_spec(spec, x):
    A = get_algebra(spec)
    if x.algebra != A:
        raise SpecMismatch(f"element lives in {x.algebra!r}, expected {A!r}")
    return A


def _fdb_token_key(spec, tok):
    name, k = tok[0], tok[1] if len(tok) > 1 else None
    if spec.preset in ("BFdB", "HFdB"):
        if name == "u" and k >= 1:
            return _trim([0] * (k - 1) + [1])
        if name == "g":
            return (1,)
        if name == "G" and spec.preset == "HFdB":
            return (-1,)
        if name == "E" and k is not None and k >= 0:
            return _trim([0] * k + [1])
    if spec.preset == "BFdBnc":
        if name == "a" and k >= 0:
            return (k,)
        if name == "W" and k >= 0:
            return (k,)
    raise IllegalGenerator(f"generator {tok} is not available in {spec.preset}")


def normal_form(spec, raw, strategy="memo", seed=0):
    """Reduce a formal combination {token tuple: coefficient} to canonical form.

    Accepts a dict, a list of (coefficient, tokens) pairs, or a single token tuple.
    """
    if isinstance(raw, tuple):
        raw = {raw: 1}
    elif isinstance(raw, list):
        acc = {}
        for c, seq in raw:
            acc[tuple(seq)] = acc.get(tuple(seq), 0) + c
        raw = acc
    A = get_algebra(spec)
    fld = A.field
    if spec.is_ore or spec.preset == "BF":
        R = get_rewriter(spec)
        out = R.normalize(raw, strategy=strategy, seed=seed)
        terms = {}
        for s, v in out.items():
            key = R.seq_to_key(s)
            if spec.is_ore:
                key = A.normalize_key(*key)
                if key is None:
                    continue
            add_into(terms, {key: v}, fld)
        return Element(A, terms)
    acc = A.zero()
    for seq, c in raw.items():
        term = A.one()
        for tok in seq:
            term = term * A.monomial(_fdb_token_key(spec, tok))
        acc = acc + term.scale(c)
    return acc


def q_multiply(spec, a, b):
    _check_spec(spec, a)
    _check_spec(spec, b)
    return a * b


def element(spec, terms):
    """Build a canonical element from {key: coefficient}."""
    A = get_algebra(spec)
    return Element(A, {k: A.field(v) for k, v in terms.items()})


def project_from_free(spec, a):
    """pi: k<g,h> -> quotient.  E_alpha with alpha(g) >= 2 die, E_{g h^k} -> E_k, E_h -> h."""
    if not spec.is_ore:
        raise SpecMismatch(f"{spec.preset} is not a quotient of the free algebra")
    A = get_algebra(spec)
    if a.field != A.field:
        raise SpecMismatch("field mismatch between element and spec")
    coords = pbw_coordinates(a)
    fld = A.field
    acc = {}
    for pkey, c in coords.terms.items():
        h_exp, exps, b = 0, [], 0
        dead = False
        for l, e in pkey:
            ng, nh = letter_counts(l)
            if ng >= 2:
                dead = True
                break
            if l == "h":
                h_exp += e
            elif l == "g":
                b += e
            else:
                k = nh
                if len(exps) < k:
                    exps.extend([0] * (k - len(exps)))
                exps[k - 1] += e
        if dead:
            continue
        key = A.normalize_key(h_exp, exps, b)
        if key is None:
            continue
        add_into(acc, {key: c}, fld)
    return Element(A, acc)


def project_tensor_from_free(spec, t):
    """(pi (x) pi) of a free-algebra tensor."""
    from .free import free_algebra
    A = get_algebra(spec)
    fld = A.field
    F = free_algebra(fld)
    cache = {}

    def pi_word(w):
        if w not in cache:
            cache[w] = project_from_free(spec, F.word(w)).terms
        return cache[w]

    acc = {}
    for (w1, w2), v in t.terms.items():
        p1 = pi_word(w1)
        if not p1:
            continue
        p2 = pi_word(w2)
        for k1, c1 in p1.items():
            for k2, c2 in p2.items():
                add_into(acc, {(k1, k2): fld.mul(c1, c2)}, fld, v)
    return Tensor(A, A, acc)


def q_coproduct(spec, a):
    A = _check_spec(spec, a)
    t = A.coproduct(a)
    if spec.cop and not isinstance(A, (OreAlgebra, BFAlgebra)):
        t = t.swap()
    return t


def q_counit(spec, a):
    A = _check_spec(spec, a)
    return Scalar(A.counit(a), A.field)


def q_antipode(spec, a):
    A = _check_spec(spec, a)
    if not spec.is_hopf:
        raise NotHopf(f"{spec.preset} does not admit a Hopf algebra structure")
    if spec.cop and not isinstance(A, OreAlgebra):
        raise NotHopf("the inverse antipode is only implemented for the Ore presets")
    return A.antipode(a)


def tensor_multiply_out(t):
    """m: A (x) A -> A."""
    A = t.left
    acc = {}
    for (x, y), v in t.terms.items():
        add_into(acc, A.mono_mul(x, y), A.field, v)
    return Element(A, acc)


def _coproduct_terms(spec, A, key):
    if isinstance(A, (OreAlgebra, BFAlgebra)):
        return A.coproduct_key(key)
    t = A.coproduct_key(key)
    return {(y, x): v for (x, y), v in t.items()} if spec.cop else t


def _counit_key(A, key):
    return A.counit_key(key)


# overlap ambiguities

def check_overlap_ambiguities(spec, K=None):
    """Resolve every overlap ambiguity of the reduction system with indices <= K."""
    if K is None:
        K = 2 * spec.p if spec.p else 12
    R = RewriteSystem(spec)
    A = get_algebra(spec)
    fld = A.field
    rep = Report("ambiguities", spec=spec.label(), K=K)

    def to_elem(lin):
        terms = {}
        for s, v in lin.items():
            key = R.seq_to_key(s)
            if spec.is_ore:
                key = A.normalize_key(*key)
                if key is None:
                    continue
            add_into(terms, {key: v}, fld)
        return Element(A, terms)

    for label, word, left, right in R.overlaps(K):
        lhs = {}
        for s, c in R.apply(word, left):
            add_into(lhs, {s: fld.from_int(c)}, fld)
        rhs = {}
        for s, c in R.apply(word, right):
            add_into(rhs, {s: fld.from_int(c)}, fld)
        lred = to_elem(R.reduce_memo(lhs))
        rred = to_elem(R.reduce_memo(rhs))
        residual = rred - lred
        rep.add(
            f"{label}: {describe_overlap(R, word, left, right)}",
            residual.is_zero(),
            witness=f"residual {residual}",
            left=str(lred),
            right=str(rred),
            residual=str(residual),
        )
    return rep


# bialgebra axioms

def default_g_range(spec):
    if spec.g_order is not None:
        return range(spec.g_order)
    if spec.localized:
        return range(-1, 2)
    return range(0, 3)


def basis_up_to(spec, degree_bound, g_range=None):
    A = get_algebra(spec)
    out = []
    for d in range(degree_bound + 1):
        if spec.preset == "BFdBnc":
            out.extend(A.basis_of_degree(d))
        elif spec.preset in ("BFdB", "HFdB", "BF"):
            out.extend(A.basis_of_degree(d, g_range or default_g_range(spec)))
        else:
            if A.max_degree() is not None and d > A.max_degree():
                break
            out.extend(A.basis_of_degree(d, g_range or default_g_range(spec)))
    return out


def _degree(A, key):
    return A.degree(key)


def verify_bialgebra_axioms(spec, degree_bound, seed=0, g_range=None, pairs=30):
    A = get_algebra(spec)
    fld = A.field
    rep = Report("bialgebra-axioms", spec=spec.label(), degree_bound=degree_bound, seed=seed)
    basis = basis_up_to(spec, degree_bound, g_range)
    rep.note(f"{len(basis)} basis monomials checked")

    def delta(key):
        return _coproduct_terms(spec, A, key)

    coass = counit_ok = graded = True
    witness = None
    for key in basis:
        d = delta(key)
        left3 = {}
        right3 = {}
        for (x, y), v in d.items():
            for (x1, x2), u in delta(x).items():
                add_into(left3, {(x1, x2, y): fld.mul(v, u)}, fld)
            for (y1, y2), u in delta(y).items():
                add_into(right3, {(x, y1, y2): fld.mul(v, u)}, fld)
        if left3 != right3:
            coass = False
            witness = witness or A.format_key(key)
        l_side, r_side = {}, {}
        for (x, y), v in d.items():
            ex, ey = A.counit_key(x), A.counit_key(y)
            if ex:
                add_into(l_side, {y: fld.mul(v, ex)}, fld)
            if ey:
                add_into(r_side, {x: fld.mul(v, ey)}, fld)
        if l_side != {key: fld.one} or r_side != {key: fld.one}:
            counit_ok = False
            witness = witness or A.format_key(key)
        dk = A.degree(key)
        if any(A.degree(x) + A.degree(y) != dk for (x, y) in d):
            graded = False
            witness = witness or A.format_key(key)
    rep.add("coassociativity", coass, witness=witness)
    rep.add("counit axioms", counit_ok, witness=witness)
    rep.add("grading: Delta(A(n)) in sum A(k) (x) A(n-k)", graded, witness=witness)

    rng = random.Random(seed)
    mult_ok = True
    bad = None
    if basis:
        for _ in range(pairs):
            x, y = rng.choice(basis), rng.choice(basis)
            xy = A.monomial(x) * A.monomial(y)
            lhs = {}
            for k, v in xy.terms.items():
                add_into(lhs, delta(k), fld, v)
            rhs = Tensor(A, A, delta(x)) * Tensor(A, A, delta(y))
            if lhs != rhs.terms:
                mult_ok = False
                bad = (A.format_key(x), A.format_key(y))
                break
    rep.add(f"Delta multiplicative on {pairs} random products", mult_ok, witness=bad)

    if spec.is_hopf and not (spec.cop and not isinstance(A, OreAlgebra)):
        anti_ok = True
        bad = None
        for key in basis:
            d = delta(key)
            eps = A.counit_key(key)
            target = {A.one_key: eps} if eps else {}
            lhs, rhs = {}, {}
            for (x, y), v in d.items():
                sx = A.antipode(A.monomial(x))
                sy = A.antipode(A.monomial(y))
                add_into(lhs, (sx * A.monomial(y)).terms, fld, v)
                add_into(rhs, (A.monomial(x) * sy).terms, fld, v)
            if lhs != target or rhs != target:
                anti_ok = False
                bad = A.format_key(key)
                break
        rep.add("antipode axiom m(S (x) id)Delta = eps = m(id (x) S)Delta", anti_ok, witness=bad)
    else:
        try:
            q_antipode(spec, A.one())
            refused = False
        except NotHopf:
            refused = True
        rep.add("antipode refused (NotHopf)", refused)
    return rep


def validate_and_get(spec):
    validate_spec(spec)
    return get_algebra(spec)


def describe_seq(seq):
    return seq_str(seq)


# the subalgebra generated by omega~_n and E_n, as checked inside TBar

def _bf_tbar(spec):
    from .presets import AlgebraSpec
    t = AlgebraSpec("TBar", spec.characteristic)
    return get_algebra(t.with_cop() if spec.cop else t)


def bf_image(x, target=None):
    """Image of a BF element in TBar: w(m) -> g h^m, E(k) -> E(k), g -> g."""
    B = x.algebra
    T = target or _bf_tbar(B.spec)
    out = T.zero()
    for (m, e, b), v in x.terms.items():
        mono = T.g() * T.h() ** m if m else T.one()
        mono = mono * T.monomial(T.normalize_key(0, e, b))
        out = out + mono.scale(v)
    return out


def _bf_token_words(d, c, T, B):
    """All words of c tokens (g, E(k), w(m)) of total degree d, with their BF and TBar values."""
    def rec(d_left, c_left):
        if c_left == 0:
            if d_left == 0:
                yield ()
            return
        for k in range(d_left + 1):
            names = [("g", 0)] if k == 0 else [("E", k), ("W", k)]
            for tok in names:
                for rest in rec(d_left - k, c_left - 1):
                    yield (tok,) + rest
    for word in rec(d, c):
        yield word


def bf_embedding_check(spec=None, degree_bound=6, token_bound=4):
    """PBW basis of BF against its image in TBar, piece by piece in (degree, token count).

    independence: the TBar images of the BF basis monomials are linearly independent;
    spanning: the TBar images of all token words span a space of the same dimension;
    normal forms: the image of the BF normal form of every word equals the TBar product.
    """
    from .linalg import Echelon
    from .presets import AlgebraSpec
    spec = spec or AlgebraSpec("BF", 0)
    B = get_algebra(spec)
    T = _bf_tbar(spec)
    fld = B.field
    rep = Report("bf-embedding", spec=spec.label(), degree_bound=degree_bound, token_bound=token_bound)
    gens_B, gens_T = {}, {}
    for d in range(degree_bound + 1):
        for c in range(token_bound + 1):
            keys = [k for k in B.basis_of_degree(d, range(0, c + 1)) if B.token_count(k) == c]
            basis_ech = Echelon(fld)
            for k in keys:
                basis_ech.add(dict(bf_image(B.monomial(k), T).terms))
            words_ech = Echelon(fld)
            nf_ok = True
            bad = None
            nwords = 0
            for word in _bf_token_words(d, c, T, B):
                nwords += 1
                xb, xt = B.one(), T.one()
                for tok in word:
                    if tok not in gens_B:
                        gens_B[tok] = B.gen(*tok)
                        gens_T[tok] = bf_image(gens_B[tok], T)
                    xb = xb * gens_B[tok]
                    xt = xt * gens_T[tok]
                words_ech.add(dict(xt.terms))
                if nf_ok and bf_image(xb, T) != xt:
                    nf_ok = False
                    bad = word
            if not keys and not nwords:
                continue
            rep.add(f"degree {d}, {c} tokens: {len(keys)} basis monomials independent",
                    basis_ech.rank == len(keys), witness=f"rank {basis_ech.rank}",
                    basis=len(keys), rank=basis_ech.rank)
            rep.add(f"degree {d}, {c} tokens: {nwords} words span rank {words_ech.rank}",
                    words_ech.rank == len(keys), witness=f"words rank {words_ech.rank} vs {len(keys)}")
            rep.add(f"degree {d}, {c} tokens: normal forms agree with TBar products", nf_ok, witness=bad)
    cop_ok = True
    bad = None
    for key in basis_up_to(spec, min(degree_bound, 4), range(0, 2)):
        x = B.monomial(key)
        img = {}
        for (k1, k2), v in B.coproduct_key(key).items():
            left, right = bf_image(B.monomial(k1), T), bf_image(B.monomial(k2), T)
            for a, u in left.terms.items():
                for b_, w in right.terms.items():
                    add_into(img, {(a, b_): fld.mul(v, fld.mul(u, w))}, fld)
        if img != T.coproduct(bf_image(x, T)).terms:
            cop_ok = False
            bad = B.format_key(key)
            break
    rep.add("coproduct commutes with the embedding (degree <= 4)", cop_ok, witness=bad)
    return rep


def bf_relations_check(spec=None, index_bound=5):
    """Commutation rules of omega~ and E as identities, both in BF and through the TBar image."""
    from .presets import AlgebraSpec
    from .scalars import binomial
    spec = spec or AlgebraSpec("BF", 0)
    B = get_algebra(spec)
    T = _bf_tbar(spec)
    fld = B.field
    rep = Report("bf-relations", spec=spec.label(), index_bound=index_bound)
    W = [B.gen("W", i) for i in range(2 * index_bound + 1)]
    Ek = [B.gen("E", i) for i in range(2 * index_bound + 1)]

    def c(n):
        return fld.from_int(n)

    def both(label, lhs, rhs):
        ok_b = lhs == rhs
        ok_t = bf_image(lhs, T) == bf_image(rhs, T)
        rep.add(label, ok_b and ok_t, witness=f"difference {rhs - lhs}")

    N = index_bound
    for m in range(N + 1):
        for n in range(N + 1):
            both(f"E({m})E({n}) = E({n})E({m})", Ek[m] * Ek[n], Ek[n] * Ek[m])
    for m in range(N + 1):
        for n in range(N + 1):
            rhs = B.zero()
            for k in range(n + 1):
                rhs = rhs + (W[n - k] * Ek[m + k]).scale(c(binomial(n, k)))
            both(f"E({m})w({n}) = sum C({n},k) w({n}-k)E({m}+k)", Ek[m] * W[n], rhs)
    for m in range(N + 1):
        for n in range(N + 1):
            rhs = B.zero()
            for k in range(n + 1):
                rhs = rhs + (W[m + n - k] * Ek[k]).scale(c(binomial(n, k)))
            both(f"w({m})w({n}) = sum C({n},k) w({m}+{n}-k)E(k)", W[m] * W[n], rhs)
    for r in range(N + 1):
        for s in range(N + 1):
            rhs = B.zero()
            for t in range(s + 1):
                rhs = rhs + (W[r + t] * W[s - t]).scale(c((-1) ** t * binomial(s, t)))
            both(f"w({r})E({s}) = sum C({s},t)(-1)^t w({r}+t)w({s}-t)", W[r] * Ek[s], rhs)
    return rep


def omega_identities_check(n_bound=8, field=None):
    """Identities between omega_n = g h^n and E_{omega_n} in the free algebra, and their images in TBar."""
    from .free import free_algebra, ls_element, omega
    from .presets import AlgebraSpec
    from .scalars import QQ, binomial
    fld = field or QQ
    F = free_algebra(fld)
    spec = AlgebraSpec("TBar", 0 if fld == QQ else fld.p)
    T = get_algebra(spec)
    rep = Report("omega-identities", n_bound=n_bound)
    h = F.word("h")
    Ew = [ls_element("g" + "h" * k, fld) for k in range(n_bound + 2)]
    om = [omega(k, fld) for k in range(n_bound + 2)]

    def c(n):
        return fld.from_int(n)

    for n in range(n_bound + 1):
        rhs = F.zero()
        for k in range(n + 1):
            rhs = rhs + (h ** (n - k) * Ew[k]).scale(c(binomial(n, k)))
        rep.add(f"omega_{n} = sum C({n},k) h^({n}-k) E_omega_k", om[n] == rhs)
        rhs = F.zero()
        for k in range(n + 1):
            rhs = rhs + (h ** k * om[n - k]).scale(c((-1) ** k * binomial(n, k)))
        ok = Ew[n] == rhs
        ok = ok and project_from_free(spec, Ew[n]) == project_from_free(spec, rhs)
        rep.add(f"E_omega_{n} = sum (-1)^k C({n},k) h^k omega_({n}-k)", ok)
        rhs = h * om[n]
        for k in range(n + 1):
            rhs = rhs + (h ** (n - k) * Ew[1 + k]).scale(c(binomial(n, k)))
        rep.add(f"omega_{n} h = h omega_{n} + sum C({n},k) h^({n}-k) E_omega_(1+k)",
                om[n] * h == rhs and om[n] * h == om[n + 1])
    for m in range(min(n_bound, 5) + 1):
        for n in range(min(n_bound, 5) + 1):
            lhs = project_from_free(spec, ls_element("g" + "h" * m, fld)) * project_from_free(spec, om[n])
            rhs = T.zero()
            for k in range(n + 1):
                rhs = rhs + (project_from_free(spec, om[n - k]) * T.E(m + k) if m + k else
                             project_from_free(spec, om[n - k]) * T.g()).scale(c(binomial(n, k)))
            rep.add(f"pi(E_omega_{m}) pi(omega_{n}) = sum C({n},k) pi(omega_({n}-k)) pi(E_omega_({m}+k))",
                    lhs == rhs)
    return rep
