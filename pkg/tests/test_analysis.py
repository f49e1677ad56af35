import math

import pytest

from nchopf import (INFINITE, TBar, TBarN, TBarNP, TBarNPD, TBarNPrime, TBarPm, dimension, get_algebra,
                    gk_estimate, graded_dimension, growth_function, skew_primitives)
from nchopf.analysis import (GrowthTable, check_skew_primitive, coradical_first_term, growth_by_normal_forms,
                             length_counts, pbw_dimension_count, same_span, span_rank)
from nchopf.errors import DegenerateWindow, InfinitePiece, SpecMismatch
from nchopf.presets import BF


def test_graded_dimensions():
    assert graded_dimension(TBarNP(3, 3), 6) == [3, 6, 9, 9, 9, 9, 9]
    dims = graded_dimension(TBarNPD(3, 3, (1,)), 6)
    assert dims[0] == 3 and sum(dims) == 27
    # h^a E-monomials with deg E(k) = k: partitions with a coloured part 1
    assert graded_dimension(TBar(), 3, g_cap=1) == [1, 2, 4, 7]
    with pytest.raises(InfinitePiece):
        graded_dimension(TBar(), 3)


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("mult", [1, 2])
def test_dimension_enumeration_matches_closed_form(p, mult):
    from itertools import combinations_with_replacement
    n = p * mult
    for d in combinations_with_replacement((1, 2), p - 2):
        spec = TBarNPD(p, n, d)
        want = n * p ** (1 + sum(d))
        if want > 10 ** 6:
            continue
        assert dimension(spec) == want
        assert pbw_dimension_count(spec) == want


def test_infinite_dimensions():
    assert dimension(TBarNP(5, 5)) == INFINITE
    assert dimension(TBarNPD(5, 5, (1,))) == INFINITE
    assert dimension(TBar()) == INFINITE
    with pytest.raises(SpecMismatch):
        dimension(BF())


@pytest.mark.parametrize("spec,N", [(TBar(), 8), (TBarN(3, 3), 8), (TBarNP(3, 3), 9), (TBarNPrime(3, 3), 8),
                                    (TBarNPD(3, 3, (1,)), 9), (TBar(3), 8)], ids=lambda x: getattr(x, "label", lambda: x)())
def test_growth_count_matches_normal_form_rank(spec, N):
    assert growth_by_normal_forms(spec, N) == growth_function(spec, N).values


def test_localized_growth_counts_g_inverse_as_one_letter():
    # g^-1 h = h g^-1 - E(1) g^-2, so words reach monomials longer than themselves;
    # the monomial count uses length |b| for g^b and therefore falls below the word span
    counted = growth_function(TBarPm(), 6).values
    spanned = growth_by_normal_forms(TBarPm(), 6)
    assert counted[:2] == spanned[:2]
    assert all(c[1] <= s[1] for c, s in zip(counted, spanned))
    assert counted[2][1] == 10 and spanned[2][1] == 11


def test_growth_table_basics():
    t = growth_function(TBarNP(3, 3), 12)
    assert t.values[0] == (0, 1)
    assert all(a[1] <= b[1] for a, b in zip(t.values, t.values[1:]))
    assert t.to_csv().splitlines()[:3] == ["n,d_V", "0,1", "1,3"]
    assert t.generating_set == "span{1, g, h}"
    assert growth_function(TBarPm(), 3).generating_set == "span{1, g, g^-1, h}"
    assert sum(length_counts(TBarNP(3, 3), 5)) == t.d(5)


def test_gk_estimate_on_exact_power_law():
    t = GrowthTable([(n, n ** 3) for n in range(1, 60)])
    est = gk_estimate(t, (10, 50))
    assert abs(float(est) - 3) < 1e-9
    assert est.points == 41
    assert est.residual < 1e-9


def test_gk_estimate_errors():
    t = growth_function(TBarNP(3, 3), 30)
    with pytest.raises(DegenerateWindow):
        gk_estimate(t, (1, 10))
    with pytest.raises(DegenerateWindow):
        gk_estimate(t, (10, 10))
    with pytest.raises(DegenerateWindow):
        gk_estimate(t, (40, 50))


def test_gk_linear_growth_for_p3():
    # GK dimension p - 2 = 1 for TBarNP(3, 3)
    est = gk_estimate(growth_function(TBarNP(3, 3), 400), (100, 400))
    assert abs(float(est) - 1) < 0.1


def test_tbar_growth_ratio_trend():
    t = growth_function(TBar(), 120)
    r = [math.log(d) / math.sqrt(n) for n, d in t.values[10:]]
    assert all(a < b for a, b in zip(r, r[1:]))
    assert r[-1] < math.pi * math.sqrt(2 / 3)


def test_skew_primitives_small():
    spec = TBarNPD(3, 3, (1,))
    A = get_algebra(spec)
    basis = skew_primitives(spec, 1, 0, A.max_degree())
    for c in basis:
        assert check_skew_primitive(spec, c, 1, 0)
    # without the cop flip both h and E(1) g^2 are (1, g)-skew primitive
    want = [A.one() - A.g(), A.h(), A.E(1) * A.g(2)]
    assert same_span(skew_primitives(spec, 0, 1, A.max_degree()), want)


def test_skew_primitives_accept_grouplike_elements():
    spec = TBarNPD(3, 3, (1,))
    A = get_algebra(spec)
    assert same_span(skew_primitives(spec, A.one(), A.g(), 4), skew_primitives(spec, 0, 1, 4))
    with pytest.raises(SpecMismatch):
        skew_primitives(spec, A.h(), A.g(), 4)


def test_coradical_first_term():
    spec = TBarNPD(3, 3, (1,))
    assert span_rank(coradical_first_term(spec, 4)) == 9
