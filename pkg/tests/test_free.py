import itertools
import random

from nchopf import (GF, QQ, PbwVector, bracket, is_lyndon, ls_element, lyndon_enumerate, pbw_coordinates, pbw_expand,
                    sh_prime, shuffle_poly, standard_factorization, t_coproduct, t_counit, word)
from nchopf.free import all_words, free_algebra, omega, pbw_key_from_word
from nchopf.vector import Tensor


def test_shuffle_poly_is_sum_of_words_with_given_letter_counts():
    F = free_algebra(QQ)
    for i in range(6):
        for j in range(6):
            brute = F.zero()
            for w in all_words(i + j):
                if w.count("h") == i:
                    brute = brute + F.word(w)
            assert shuffle_poly(i, j) == brute, (i, j)


def test_binomial_expansion_of_g_plus_h():
    g, h = word("g"), word("h")
    for n in range(7):
        total = shuffle_poly(0, 0).algebra.zero()
        for k in range(n + 1):
            total = total + shuffle_poly(k, n - k)
        assert (g + h) ** n == total


def test_coproduct_examples():
    g, h = word("g"), word("h")
    one = g.algebra.one()
    assert t_coproduct(h ** 2) == Tensor.pure(one, h ** 2) + Tensor.pure(h, h * g + g * h) + Tensor.pure(h ** 2, g ** 2)
    assert t_coproduct(g ** 3) == Tensor.pure(g ** 3, g ** 3)


def test_counit():
    g, h = word("g"), word("h")
    assert t_counit(g ** 3) == QQ.one
    assert t_counit(g * h + h * g) == 0
    for r in range(1, 6):
        assert t_counit(ls_element("g" + "h" * r)) == 0


def _apply_left(t, fn):
    out = {}
    for (a, b), v in t.terms.items():
        for (a1, a2), u in fn(a).items():
            out[(a1, a2, b)] = out.get((a1, a2, b), 0) + v * u
    return {k: v for k, v in out.items() if v}


def _apply_right(t, fn):
    out = {}
    for (a, b), v in t.terms.items():
        for (b1, b2), u in fn(b).items():
            out[(a, b1, b2)] = out.get((a, b1, b2), 0) + v * u
    return {k: v for k, v in out.items() if v}


def test_coassociativity_and_counit_on_short_words():
    def delta(w):
        return t_coproduct(word(w)).terms
    for n in range(7):
        for w in all_words(n):
            d = t_coproduct(word(w))
            assert _apply_left(d, delta) == _apply_right(d, delta), w
            left = {}
            right = {}
            for (a, b), v in d.terms.items():
                if "h" not in a:
                    left[b] = left.get(b, 0) + v
                if "h" not in b:
                    right[a] = right.get(a, 0) + v
            assert {k: v for k, v in left.items() if v} == {w: 1}
            assert {k: v for k, v in right.items() if v} == {w: 1}


def test_coproduct_is_multiplicative_on_random_pairs():
    rng = random.Random(7)
    for _ in range(40):
        a = "".join(rng.choice("gh") for _ in range(rng.randint(0, 5)))
        b = "".join(rng.choice("gh") for _ in range(rng.randint(0, 5)))
        assert t_coproduct(word(a) * word(b)) == t_coproduct(word(a)) * t_coproduct(word(b))


def test_ls_element_is_multihomogeneous():
    for w in lyndon_enumerate(8):
        counts = (w.count("g"), w.count("h"))
        assert all((u.count("g"), u.count("h")) == counts for u in ls_element(w).terms)


def test_commutator_rule_a():
    words = lyndon_enumerate(7)
    for a, b in itertools.product(words, repeat=2):
        if a < b and len(a + b) <= 8:
            if len(a) == 1 or standard_factorization(a)[1] >= b:
                assert bracket(ls_element(a), ls_element(b)) == ls_element(a + b), (a, b)


def test_commutator_rule_b_support():
    words = lyndon_enumerate(7)
    seen = 0
    for a, b in itertools.product(words, repeat=2):
        if a < b and len(a) > 1 and len(a + b) <= 8 and standard_factorization(a)[1] < b:
            seen += 1
            coords = pbw_coordinates(bracket(ls_element(a), ls_element(b)))
            assert coords.terms.get(((a + b, 1),)), (a, b)
            for key in coords.terms:
                assert len(key) == 1 and key[0][1] == 1, (a, b, key)
                gamma = key[0][0]
                assert is_lyndon(gamma)
                assert a + b <= gamma < b
                assert (gamma.count("g"), gamma.count("h")) == ((a + b).count("g"), (a + b).count("h"))
    assert seen > 20


def test_pbw_round_trip_on_random_monomials():
    rng = random.Random(3)
    F = free_algebra(QQ)
    for _ in range(60):
        w = "".join(rng.choice("gh") for _ in range(rng.randint(1, 7)))
        key = pbw_key_from_word(w)
        x = pbw_expand(pbw_coordinates(F.word(w)))
        assert x == F.word(w)
        assert pbw_coordinates(pbw_expand(PbwVector({key: 1}))).terms == {key: 1}


def test_sh_prime_examples():
    for m in range(1, 6):
        assert pbw_expand(sh_prime(m, 1)) == ls_element("g" + "h" * m)
    assert pbw_expand(sh_prime(0, 3)) == word("g") ** 3


def test_omega_words():
    assert omega(3) == word("ghhh")
    assert ls_element("ghh") == bracket(bracket(word("g"), word("h")), word("h"))


def test_prime_field_coefficients():
    F3 = GF(3)
    # ghh expands with coefficient 2 on hgh, which is -1 mod 3
    e = ls_element("ghh", F3)
    assert e.terms["hgh"] == 1
    assert shuffle_poly(1, 2, F3) == ls_element("g", F3).algebra.from_int_terms({"hgg": 1, "ghg": 1, "ggh": 1})
