import pytest

from nchopf import (BF, TBar, TBarN, TBarNP, TBarNPrime, TBarPm, TBarPmPrime, bf_embedding_check,
                    check_overlap_ambiguities, get_algebra, ls_element, normal_form, omega, project_from_free,
                    q_antipode, q_coproduct, q_counit, q_multiply, shuffle_poly, verify_bialgebra_axioms, word)
from nchopf.errors import (BadDVector, CharMismatch, IllegalGenerator, NonPrimeP, NotHopf, PNotDividingN,
                           SpecMismatch)
from nchopf.presets import AlgebraSpec, BFdB, validate_spec
from nchopf.quotients import element, project_tensor_from_free
from nchopf.rewriting import G, GI, H, W
from nchopf.scalars import Scalar
from nchopf.vector import Tensor


def test_validate_spec_accepts_and_rejects():
    assert validate_spec(TBarNP(5, 5)) == TBarNP(5, 5)
    bad = [
        (dict(preset="TBarNP", characteristic=5, p=5, n=7), PNotDividingN),
        (dict(preset="TBarNPD", characteristic=5, p=5, n=5, d=(2, 1)), BadDVector),
        (dict(preset="TBarNPD", characteristic=3, p=3, n=3, d=(1, 1)), BadDVector),
        (dict(preset="TBarNP", characteristic=3, p=5, n=5), CharMismatch),
        (dict(preset="TBarNP", characteristic=4, p=4, n=4), NonPrimeP),
    ]
    for kw, err in bad:
        with pytest.raises(err):
            validate_spec(AlgebraSpec(**kw))


def test_normal_form_examples():
    assert str(normal_form(TBar(), (G, H))) == "h*g + E(1)"
    assert normal_form(TBarNP(3, 3), (H, H, H)).is_zero()
    assert str(normal_form(BF(), (W(1), W(1)))) == "w(2)*g + w(1)*E(1)"
    assert str(normal_form(TBarPm(), (GI, H))) == "h*g^-1 - E(1)*g^-2"
    with pytest.raises(IllegalGenerator):
        normal_form(TBar(), (GI,))


def test_q_multiply_examples():
    T = get_algebra(TBar())
    assert q_multiply(TBar(), T.E(1), T.h()) == T.h() * T.E(1) + T.E(2)
    assert str(q_multiply(TBar(), T.E(2), T.E(1))) == "E(2)*E(1)"
    N = get_algebra(TBarN(3, 3))
    assert q_multiply(TBarN(3, 3), N.g(2), N.g()) == N.one()
    with pytest.raises(SpecMismatch):
        q_multiply(TBarN(3, 3), N.g(), T.g())


def test_ore_relations():
    T = get_algebra(TBar())
    h, g = T.h(), T.g()
    for k in range(0, 8):
        e = T.E(k) if k else g
        # the bracket with h lands in the E-subalgebra
        assert e * h - h * e == T.E(k + 1)
        assert g * T.E(k + 1) == T.E(k + 1) * g


def test_projection_examples():
    spec = TBar()
    T = get_algebra(spec)
    assert project_from_free(spec, ls_element("ggh")).is_zero()
    for n in range(6):
        want = T.zero()
        from nchopf.scalars import binomial
        for k in range(n + 1):
            ek = T.E(k) if k else T.g()
            want = want + (T.h() ** (n - k) * ek).scale(binomial(n, k))
        assert project_from_free(spec, omega(n)) == want
    lhs = project_from_free(spec, word("g") * shuffle_poly(2, 1))
    rhs = project_from_free(spec, omega(2) * omega(0) + omega(1) * omega(1) + omega(0) * omega(2))
    assert lhs == rhs
    with pytest.raises(SpecMismatch):
        project_from_free(BFdB(), word("g"))


def test_coproduct_examples():
    spec = TBar()
    T = get_algebra(spec)
    g = T.g()
    assert q_coproduct(spec, T.E(1)) == Tensor.pure(g, T.E(1)) + Tensor.pure(T.E(1), g ** 2)
    for p in (3, 5):
        s = TBarN(p, 2 * p)
        A = get_algebra(s)
        want = Tensor.pure(A.one(), A.h() ** p) + Tensor.pure(A.h(), A.E(p - 1)) + Tensor.pure(A.h() ** p, A.g(p))
        assert q_coproduct(s, A.h() ** p) == want


def test_top_E_is_skew_primitive_before_it_is_killed():
    # in TBarN(p, p) the generator E(p-1) survives; it is (g, g^p)-skew primitive there
    for p in (3, 5):
        A = get_algebra(TBarN(p, 2 * p))
        e = A.E(p - 1)
        assert A.coproduct(e) == Tensor.pure(A.g(), e) + Tensor.pure(e, A.g(p))


def test_counit():
    T = get_algebra(TBar())
    assert q_counit(TBar(), T.g(3)) == Scalar(1)
    assert q_counit(TBar(), T.h() * T.E(2)) == Scalar(0)


def test_antipode():
    N = get_algebra(TBarN(3, 3))
    assert q_antipode(TBarN(3, 3), N.h()) == -(N.h() * N.g(2))
    assert q_antipode(TBarN(3, 3), N.g()) == N.g(2)
    P = get_algebra(TBarPm())
    assert q_antipode(TBarPm(), P.g()) == P.g(-1)
    with pytest.raises(NotHopf):
        q_antipode(TBar(), get_algebra(TBar()).h())
    with pytest.raises(NotHopf):
        q_antipode(BF(), get_algebra(BF()).one())


@pytest.mark.parametrize("spec", [TBar(), TBarPm(), TBarN(3, 3), TBarNP(3, 3), TBarNPrime(3, 3)],
                         ids=lambda s: s.label())
def test_projection_is_a_bialgebra_map_on_words(spec):
    from nchopf.free import all_words
    from nchopf import t_coproduct
    fld = spec.field
    for n in range(5):
        for w in all_words(n):
            x = word(w, fld)
            px = project_from_free(spec, x)
            assert project_tensor_from_free(spec, t_coproduct(x)) == q_coproduct(spec, px), w
            for u in ("g", "h", "gh"):
                y = word(u, fld)
                assert project_from_free(spec, x * y) == px * project_from_free(spec, y)


def test_element_builder():
    A = get_algebra(TBar())
    x = element(TBar(), {(1, (), 0): 2, (0, (1,), 0): 1})
    assert x == A.h().scale(2) + A.E(1)


def test_axioms_report_refuses_antipode_for_tbar():
    rep = verify_bialgebra_axioms(TBar(), 5)
    assert rep.ok
    assert any(e["check"] == "antipode refused (NotHopf)" for e in rep.entries)


def test_overlap_report_lists_the_E_E_h_overlap():
    rep = check_overlap_ambiguities(TBar(), 6)
    labels = [e["check"] for e in rep.entries]
    assert "pair/pair: (E(1)*E(2))*h = E(1)*(E(2)*h)" in labels


def test_bf_check_works_in_positive_characteristic():
    assert bf_embedding_check(BF(3), degree_bound=4, token_bound=3).ok


def test_localized_prime_preset():
    s = TBarPmPrime(3)
    A = get_algebra(s)
    assert not (A.h() ** 3).is_zero()
    assert A.E(2).is_zero()
    assert A.E(1) * A.h() == A.h() * A.E(1)
    assert A.g(-1) * A.g() == A.one()
