"""Randomized invariants (hypothesis)."""

from hypothesis import given, settings
from hypothesis import strategies as st

from nchopf import (BF, GF, QQ, TBar, TBarN, TBarNP, TBarNPD, TBarNPrime, TBarPm, c_coefficients, get_algebra,
                    normal_form, pbw_coordinates, pbw_expand, project_from_free, q_antipode, q_coproduct,
                    t_coproduct, word)
from nchopf.filtration import c_closed_form
from nchopf.quotients import basis_up_to, project_tensor_from_free
from nchopf.rewriting import E, G, GI, H, W

SETTINGS = settings(max_examples=60, deadline=None)

words = st.text(alphabet="gh", max_size=7)


def _tokens(spec):
    base = [G, H, E(1), E(2), E(3)]
    if spec.localized or spec.g_order is not None:
        base.append(GI)
    if spec.preset == "BF":
        base = [E(0), E(1), E(2), W(1), W(2), W(3)]
    if spec.kmax is not None:
        base = [t for t in base if t[0] != "E" or t[1] <= spec.kmax]
    return base


ORE_SPECS = [TBar(), TBar(3), TBarPm(), TBarN(3, 3), TBarNP(3, 3), TBarNPrime(3, 3), TBarNPD(3, 3, (1,)), BF()]


@SETTINGS
@given(st.sampled_from(ORE_SPECS), st.data(), st.integers(0, 10 ** 6))
def test_normal_form_independent_of_reduction_order(spec, data, seed):
    toks = _tokens(spec)
    seq = tuple(data.draw(st.lists(st.sampled_from(toks), max_size=8)))
    memo = normal_form(spec, seq)
    assert normal_form(spec, seq, strategy="random", seed=seed) == memo
    assert normal_form(spec, seq, strategy="leftmost") == memo


@SETTINGS
@given(st.sampled_from([TBar(), TBarPm(), TBarN(3, 3), TBarNP(3, 3)]), words, words)
def test_projection_respects_product_and_coproduct(spec, a, b):
    fa, fb = word(a, spec.field), word(b, spec.field)
    pa, pb = project_from_free(spec, fa), project_from_free(spec, fb)
    assert project_from_free(spec, fa * fb) == pa * pb
    assert project_tensor_from_free(spec, t_coproduct(fa)) == q_coproduct(spec, pa)


@SETTINGS
@given(words)
def test_pbw_coordinates_round_trip(w):
    x = word(w)
    assert pbw_expand(pbw_coordinates(x)) == x


@SETTINGS
@given(words, words)
def test_free_coproduct_is_multiplicative(a, b):
    assert t_coproduct(word(a) * word(b)) == t_coproduct(word(a)) * t_coproduct(word(b))


def _delta3_left(A, t):
    out = {}
    for (x, y), v in t.terms.items():
        for (x1, x2), u in A.coproduct_key(x).items():
            k = (x1, x2, y)
            out[k] = A.field.add(out.get(k, 0), A.field.mul(v, u))
    return {k: v for k, v in out.items() if v}


def _delta3_right(A, t):
    out = {}
    for (x, y), v in t.terms.items():
        for (y1, y2), u in A.coproduct_key(y).items():
            k = (x, y1, y2)
            out[k] = A.field.add(out.get(k, 0), A.field.mul(v, u))
    return {k: v for k, v in out.items() if v}


@SETTINGS
@given(st.sampled_from(ORE_SPECS[:-1] + [TBarNPD(5, 5, (1, 1, 1)).with_cop()]), st.data())
def test_quotient_coproduct_axioms_on_random_products(spec, data):
    A = get_algebra(spec)
    basis = basis_up_to(spec, 3)
    k1 = data.draw(st.sampled_from(basis))
    k2 = data.draw(st.sampled_from(basis))
    x = A.monomial(k1) * A.monomial(k2)
    d = A.coproduct(x)
    assert d == A.coproduct(A.monomial(k1)) * A.coproduct(A.monomial(k2))
    assert _delta3_left(A, d) == _delta3_right(A, d)
    left = A.zero()
    for (a, b), v in d.terms.items():
        left = left + A.monomial(b).scale(A.field.mul(v, A.counit_key(a)))
    assert left == x


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([(3, 3), (3, 6), (5, 5)]), st.data())
def test_antipode_has_order_2p(pn, data):
    p, n = pn
    spec = TBarN(p, n)
    A = get_algebra(spec)
    key = data.draw(st.sampled_from(basis_up_to(spec, 4)))
    x = A.monomial(key)
    y = x
    for _ in range(2 * p):
        y = q_antipode(spec, y)
    assert y == x


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 30), st.data())
def test_c_coefficients_closed_form(n, data):
    k = data.draw(st.integers(2, n - 1))
    assert c_coefficients(n)[(n, k)] == c_closed_form(n, k)


@SETTINGS
@given(st.sampled_from([QQ, GF(3), GF(5)]), st.data())
def test_bf_normal_forms_follow_tbar(field, data):
    from nchopf.quotients import bf_image
    spec = BF(field.characteristic)
    B = get_algebra(spec)
    toks = data.draw(st.lists(st.sampled_from([("g", 0), ("E", 1), ("E", 2), ("W", 1), ("W", 2)]), max_size=5))
    x = B.one()
    for t in toks:
        x = x * B.gen(*t)
    img = bf_image(x)
    T = img.algebra
    direct = T.one()
    for name, k in toks:
        direct = direct * (T.g() * T.h() ** k if name == "W" else (T.E(k) if k else T.g()))
    assert img == direct
