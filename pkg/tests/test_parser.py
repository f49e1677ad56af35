from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nchopf import BF, QQ, BFdB, BFdBnc, TBar, TBarNP, TBarPm, bracket, evaluate, ls_element, parse, parse_element, to_source, word
from nchopf.errors import ExprSyntaxError, IllegalGenerator, NotLyndonWord
from nchopf.parser import BinOp, Bracket, Gen, Neg, Num, Pow
from nchopf.words import lyndon_enumerate

LYNDON = lyndon_enumerate(5)

generators = st.one_of(
    st.sampled_from([Gen("g"), Gen("h"), Gen("G")]),
    st.builds(Gen, st.just("E"), st.integers(0, 6)),
    st.builds(Gen, st.just("Ew"), st.sampled_from(LYNDON)),
    st.builds(Gen, st.sampled_from(["w", "u", "a"]), st.integers(0, 6)),
)
numbers = st.builds(Num, st.fractions(min_value=0, max_value=20, max_denominator=7))


def _pow(base, k):
    if base == Gen("G") and k == 1:
        return base
    return Pow(base, k)


exprs = st.recursive(
    st.one_of(generators, numbers),
    lambda sub: st.one_of(
        st.builds(BinOp, st.sampled_from("+-*"), sub, sub),
        st.builds(Neg, sub),
        st.builds(_pow, sub, st.integers(0, 4)),
        st.builds(Bracket, sub, sub),
    ),
    max_leaves=8,
)


@settings(max_examples=300, deadline=None)
@given(exprs)
def test_print_parse_round_trip(ast):
    src = to_source(ast)
    assert parse(src) == ast
    assert to_source(parse(src)) == src


CORPUS = [
    "g", "h", "g^-1", "g^-3", "E[gh]", "E[gghgh]", "E(3)", "w(2)", "u(4)", "a(0)",
    "g*h - h*g", "[g, [g, h]]", "[[g, h], h]", "(g + h)^3", "2*g", "1/2*E(1)", "-h", "-(g + h)",
    "g - (h - g)", "g - -h", "(-g)^2", "-(g^2)", "h^0", "3/4", "(1/2)^3", "[g, h]^2", "g*(h + g)*h",
    "E(1)*h - h*E(1)", "w(1)*w(1)", "g*h*h - 2*h*g*h + h*h*g", "[E[ggh], E[gh]]", "((g))", "g + h + g",
    "g*(h*g)", "(g*h)*g", "[g, h] - E[gh]", "0", "7", "u(1)^2*u(2)", "a(1)*a(0)*a(2)", "E[h]", "E[g]",
    "h^2*g + 2*h*E(1) + E(2)", "(g^-1)^2", "-[g, h]", "[g + h, g - h]", "2/3*g - 1/3*h", "-(-g)",
    "E(0)*h", "g^-2*h",
]


def test_corpus_round_trip():
    assert len(CORPUS) == 50
    for src in CORPUS:
        ast = parse(src)
        assert parse(to_source(ast)) == ast, src


def test_bracket_evaluates_to_lyndon_element():
    assert parse_element("[g,[g,h]]") == ls_element("ggh")
    assert parse_element("E[gh]") == ls_element("gh")
    assert parse_element("E(2)") == ls_element("ghh")
    assert parse_element("w(3)") == word("ghhh")
    assert parse_element("[E[gggh], h]") == bracket(ls_element("gggh"), word("h"))


def test_whitespace_is_ignored():
    assert parse(" g *  h\t+ [ g ,h ] ") == parse("g*h+[g,h]")


def test_evaluation_in_presets():
    assert str(parse_element("w(2) - h^2*g", TBar())) == "2*h*E(1) + E(2)"
    assert str(parse_element("g^-2*h", TBarPm())) == "h*g^-2 - 2*E(1)*g^-3"
    assert str(parse_element("1/2*E(1)", TBarNP(5, 5))) == "3*E(1)"
    assert str(parse_element("w(1)*w(1)", BF())) == "w(2)*g + w(1)*E(1)"
    assert str(parse_element("u(2)*u(1)", BFdB())) == "u2*u1"
    assert str(parse_element("a(1)*a(0)", BFdBnc())) == "a1*a0"
    assert parse_element("3/4").terms == {"": Fraction(3, 4)}


@pytest.mark.parametrize("src,col", [("g*(h", 5), ("g +* h", 4), ("3/0", 3), ("h^-1", 3), ("E(x)", 3)])
def test_syntax_errors_report_position(src, col):
    with pytest.raises(ExprSyntaxError) as info:
        parse(src)
    assert info.value.line == 1
    assert info.value.column == col


def test_multiline_position():
    with pytest.raises(ExprSyntaxError) as info:
        parse("g +\n  h *")
    assert (info.value.line, info.value.column) == (2, 6)


def test_not_lyndon():
    with pytest.raises(NotLyndonWord):
        parse("E[hg]")


def test_illegal_generators():
    for src, spec in [("u(1)", TBar()), ("g^-1", TBar()), ("h", BF()), ("u(0)", BFdB()), ("g", BFdBnc())]:
        with pytest.raises(IllegalGenerator):
            parse(src, spec)


def test_evaluate_rejects_non_spec():
    with pytest.raises(TypeError):
        evaluate(parse("g"), spec="TBar")
    assert evaluate(parse("g"), field=QQ) == word("g")


def test_unary_minus_binds_looser_than_power():
    assert parse("-h^2") == Neg(Pow(Gen("h"), 2))
    assert parse("-g^-1") == Neg(Gen("G"))
    assert parse("(-h)^2") == Pow(Neg(Gen("h")), 2)
