"""The free bialgebra k<g,h>: words, Lyndon-Shirshov elements, PBW coordinates,
shuffle-type polynomials and the coproduct with g grouplike, h (1,g)-skew."""

from functools import lru_cache
from itertools import product

from .errors import InternalError, NotLyndon, NotLyndonWord
from .scalars import QQ
from .vector import AlgebraBase, Element, Tensor, add_into
from .words import is_lyndon, lyndon_factorization, omega_word, standard_factorization


class FreeAlgebra(AlgebraBase):
    one_key = ""

    def __init__(self, field=QQ):
        self.field = field

    def __eq__(self, other):
        return isinstance(other, FreeAlgebra) and other.field == self.field

    def __hash__(self):
        return hash(("free", self.field))

    def __repr__(self):
        return f"FreeAlgebra({self.field!r})"

    def sort_key(self, w):
        return (len(w), w)

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

    def format_key(self, w):
        return w if w else "1"

    def word(self, w, coeff=1):
        return Element(self, {w: self.field(coeff)})

    def from_int_terms(self, terms):
        f = self.field
        return Element(self, {k: f(v) for k, v in terms.items()})


@lru_cache(maxsize=None)
def free_algebra(field=QQ):
    return FreeAlgebra(field)


def NcPoly(terms=None, field=QQ):
    """Convenience constructor: NcPoly({'gh': 1, 'hg': -1})."""
    A = free_algebra(field)
    return Element(A, {k: field(v) for k, v in (terms or {}).items()})


def word(w, field=QQ):
    return free_algebra(field).word(w)


def nc_multiply(a, b):
    return a * b


def bracket(a, b):
    return a * b - b * a


def _int_mul(a, b):
    acc = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = k1 + k2
            nv = acc.get(k, 0) + v1 * v2
            if nv:
                acc[k] = nv
            else:
                acc.pop(k, None)
    return acc


def _int_sub(a, b):
    acc = dict(a)
    for k, v in b.items():
        nv = acc.get(k, 0) - v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


@lru_cache(maxsize=None)
def _ls_int(w):
    if len(w) == 1:
        return {w: 1}
    left, right = standard_factorization(w)
    a, b = _ls_int(left), _ls_int(right)
    return _int_sub(_int_mul(a, b), _int_mul(b, a))


def ls_int(w):
    """Integer word expansion of E_w (read-only dict)."""
    if not w or not is_lyndon(w):
        raise NotLyndon(f"{w!r} is not a Lyndon word")
    return _ls_int(w)


def ls_element(w, field=QQ):
    if not w or not is_lyndon(w):
        raise NotLyndonWord(f"{w!r} is not a Lyndon word")
    return free_algebra(field).from_int_terms(_ls_int(w))


# PBW monomials are tuples ((lyndon, exp), ...) with strictly decreasing words.

def pbw_key_from_word(w):
    """Group the Chen-Fox-Lyndon factors of w into a PBW key."""
    out = []
    for f in lyndon_factorization(w):
        if out and out[-1][0] == f:
            out[-1] = (f, out[-1][1] + 1)
        else:
            out.append((f, 1))
    return tuple(out)


def pbw_key_word(key):
    return "".join(l * e for l, e in key)


@lru_cache(maxsize=None)
def pbw_expand_int(key):
    acc = {"": 1}
    for l, e in key:
        base = _ls_int(l)
        for _ in range(e):
            acc = _int_mul(acc, base)
    return acc


@lru_cache(maxsize=None)
def _word_coords(w):
    """PBW coordinates of a single word as an integer dict.

    The expansion of a PBW monomial has its smallest word equal to the
    concatenation of its factors, with coefficient 1; every other word is
    larger.  Eliminating smallest words therefore terminates.
    """
    key = pbw_key_from_word(w)
    exp = pbw_expand_int(key)
    if exp.get(w) != 1 or min(exp) != w:
        raise InternalError(f"PBW triangularity failed at {w}")
    coords = {key: 1}
    for u, c in exp.items():
        if u == w:
            continue
        for k, v in _word_coords(u).items():
            nv = coords.get(k, 0) - c * v
            if nv:
                coords[k] = nv
            else:
                coords.pop(k, None)
    return coords


class PbwSpace(AlgebraBase):
    """Vector space with the PBW monomials of k<g,h> as basis (printing only)."""

    one_key = ()

    def __init__(self, field=QQ):
        self.field = field

    def __eq__(self, other):
        return isinstance(other, PbwSpace) and other.field == self.field

    def __hash__(self):
        return hash(("pbw", self.field))

    def __repr__(self):
        return f"PbwSpace({self.field!r})"

    def sort_key(self, key):
        return (len(pbw_key_word(key)), pbw_key_word(key))

    def format_key(self, key):
        if not key:
            return "1"
        return "*".join(f"E[{l}]" + (f"^{e}" if e > 1 else "") for l, e in key)

    def mono_mul(self, a, b):
        A = free_algebra(self.field)
        prod = A.from_int_terms(pbw_expand_int(a)) * A.from_int_terms(pbw_expand_int(b))
        return pbw_coordinates(prod).terms


@lru_cache(maxsize=None)
def pbw_space(field=QQ):
    return PbwSpace(field)


def pbw_coordinates(a):
    f = a.field
    acc = {}
    for w, c in a.terms.items():
        for k, v in _word_coords(w).items():
            nv = f.add(acc.get(k, 0), f.mul(c, f(v)))
            if nv:
                acc[k] = nv
            else:
                acc.pop(k, None)
    return Element(pbw_space(f), acc)


def PbwVector(terms, field=QQ):
    """PbwVector({(('gh', 1),): 1}); validates the decreasing-factor shape."""
    for key in terms:
        for (l1, _), (l2, _) in zip(key, key[1:]):
            if not l1 > l2:
                raise ValueError(f"factors must strictly decrease: {key}")
        for l, e in key:
            if not is_lyndon(l) or e < 1:
                raise NotLyndon(str(key))
    return Element(pbw_space(field), {k: field(v) for k, v in terms.items()})


def pbw_expand(v):
    """Expand a PBW vector back into words."""
    A = free_algebra(v.field)
    f = v.field
    acc = {}
    for key, c in v.terms.items():
        add_into(acc, {w: f(x) for w, x in pbw_expand_int(key).items()}, f, c)
    return Element(A, acc)


@lru_cache(maxsize=None)
def _shuffle_int(i, j):
    if i < 0 or j < 0:
        return {}
    if i == 0 and j == 0:
        return {"": 1}
    acc = {}
    for w, c in _shuffle_int(i - 1, j).items():
        acc["h" + w] = acc.get("h" + w, 0) + c
    for w, c in _shuffle_int(i, j - 1).items():
        acc["g" + w] = acc.get("g" + w, 0) + c
    return acc


def shuffle_poly(i, j, field=QQ):
    """SH_{i,j}(h,g): the sum of all words with i letters h and j letters g."""
    return free_algebra(field).from_int_terms(_shuffle_int(i, j))


def sh_prime(i, j, field=QQ):
    """PBW coordinates of SH_{i,j} with monomials led by E_h removed."""
    v = pbw_coordinates(shuffle_poly(i, j, field))
    return Element(v.algebra, {k: c for k, c in v.terms.items() if not (k and k[0][0] == "h")})


_LETTER_COPRODUCT = {"g": {("g", "g"): 1}, "h": {("", "h"): 1, ("h", "g"): 1}}


@lru_cache(maxsize=4096)
def _word_coproduct(w):
    if len(w) <= 1:
        return {("", ""): 1} if not w else _LETTER_COPRODUCT[w]
    head = _word_coproduct(w[:-1])
    last = _LETTER_COPRODUCT[w[-1]]
    acc = {}
    for (a1, a2), v in head.items():
        for (b1, b2), u in last.items():
            k = (a1 + b1, a2 + b2)
            acc[k] = acc.get(k, 0) + v * u
    return acc


def t_coproduct(a):
    f = a.field
    acc = {}
    for w, c in a.terms.items():
        for k, v in _word_coproduct(w).items():
            nv = f.add(acc.get(k, 0), f.mul(c, f(v)))
            if nv:
                acc[k] = nv
            else:
                acc.pop(k, None)
    return Tensor(a.algebra, a.algebra, acc)


def t_counit(a):
    from .scalars import Scalar
    f = a.field
    total = f.zero
    for w, c in a.terms.items():
        if "h" not in w:
            total = f.add(total, c)
    return Scalar(total, f)


def tensor_mul_map(t):
    """m: A (x) A -> A."""
    A = t.left
    f = A.field
    acc = {}
    for (a, b), v in t.terms.items():
        add_into(acc, A.mono_mul(a, b), f, v)
    return Element(A, acc)


def tensor3_from(t, side, delta):
    """(delta (x) id)(t) if side == 'left' else (id (x) delta)(t), as a dict of triples."""
    f = t.field
    acc = {}
    for (a, b), v in t.terms.items():
        src = a if side == "left" else b
        for (x, y), u in delta(src).items():
            k = (x, y, b) if side == "left" else (a, x, y)
            nv = f.add(acc.get(k, 0), f.mul(v, u))
            if nv:
                acc[k] = nv
            else:
                acc.pop(k, None)
    return acc


def omega(r, field=QQ):
    """The word g h^r as an element."""
    return word(omega_word(r), field)


def all_words(n):
    return ["".join(p) for p in product("gh", repeat=n)]
