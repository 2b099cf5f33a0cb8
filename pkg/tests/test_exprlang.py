from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from thetadissect.catalog import builtin_catalog
from thetadissect.errors import (
    ExponentNotInteger, MissingEquals, MultipleEquals, ParseError,
)
from thetadissect.expr import (
    ImagPart, Negate, Power, Product, RationalConst, RealPart, RootOfUnity,
    SpecializeQ, Sum, ThetaCall, Var,
)
from thetadissect.exprlang import (
    parse_expr, parse_identity, print_expr, print_identity, tokenize,
)

A, B, Q = Var("a"), Var("b"), Var("q")
I = RootOfUnity(4, 1)
OMEGA = RootOfUnity(3, 1)


def test_tokenizer_offsets_strictly_increase():
    toks = tokenize("f(omega*a, 1/2) = b^-3")
    offsets = [t.offset for t in toks]
    assert offsets == sorted(offsets)
    assert len(set(offsets)) == len(offsets)


def test_parse_theta_with_i():
    ast = parse_expr("f(i*a, i*b)")
    assert ast == ThetaCall(Product((I, A)), Product((I, B)))


def test_parse_compact_quartic_rhs():
    ast = parse_expr("1/2*(1+i)*f(a,b) + 1/2*(1-i)*f(-a,-b)")
    half = RationalConst(Fraction(1, 2))
    expected = Sum((
        Product((half, Sum((RationalConst(Fraction(1)), I)), ThetaCall(A, B))),
        Product((
            half,
            Sum((RationalConst(Fraction(1)), Negate(I))),
            ThetaCall(Negate(A), Negate(B)),
        )),
    ))
    assert ast == expected


def test_parse_negative_exponent():
    assert parse_expr("a^-1") == Power(A, -1)
    assert parse_expr("a^-1*b") == Product((Power(A, -1), B))


def test_parse_unary_minus_binds_below_power():
    assert parse_expr("-a^2") == Negate(Power(A, 2))


def test_parse_calls():
    assert parse_expr("Re(f(a,b))") == RealPart(ThetaCall(A, B))
    assert parse_expr("Im(i)") == ImagPart(I)
    assert parse_expr("specq(a*b)") == SpecializeQ(Product((A, B)))
    assert parse_expr("zeta(12,7)") == RootOfUnity(12, 7)
    assert parse_expr("zeta(4,5)") == I  # exponent normalized mod order
    assert parse_expr("omega") == OMEGA


def test_power_is_non_associative():
    with pytest.raises(ParseError) as err:
        parse_expr("a^2^3")
    assert err.value.offset == 3


def test_juxtaposition_is_not_multiplication():
    with pytest.raises(ParseError) as err:
        parse_expr("a b")
    assert err.value.offset == 2
    with pytest.raises(ParseError) as err:
        parse_expr("2a")
    assert err.value.offset == 1


def test_exponent_must_be_integer_literal():
    with pytest.raises(ExponentNotInteger) as err:
        parse_expr("a^(2)")
    assert err.value.offset == 2


def test_parse_identity_examples():
    lhs, rhs = parse_identity("f(a,b) = f(b,a)")
    assert lhs == ThetaCall(A, B)
    assert rhs == ThetaCall(B, A)
    with pytest.raises(MissingEquals):
        parse_identity("f(a,b)")
    with pytest.raises(MultipleEquals):
        parse_identity("x = y = z")


def test_parse_error_offsets_point_into_the_input():
    bad = ["f(a,b", "a b", "a^2^3", "2a", "zeta(0,1)", "1/0", "a^(2)", "",
           "f(a,b = ", "a + ", "a * * b", "what(a)"]
    for text in bad:
        with pytest.raises(ParseError) as err:
            if "=" in text:
                parse_identity(text)
            else:
                parse_expr(text)
        assert 0 <= err.value.offset <= len(text), text


def test_print_examples():
    assert print_expr(parse_expr("f(a,b)")) == "f(a, b)"
    assert print_expr(RationalConst(Fraction(1, 2))) == "1/2"
    assert print_expr(parse_expr("omega*f(a,b) + (1-omega)*f(a^6*b^3, a^3*b^6)")) == \
        "omega*f(a, b) + (1 - omega)*f(a^6*b^3, a^3*b^6)"
    assert print_identity(ThetaCall(A, B), ThetaCall(B, A)) == "f(a, b) = f(b, a)"


def test_roundtrip_catalog_renderings():
    for identity in builtin_catalog():
        text = print_identity(identity.lhs, identity.rhs)
        lhs, rhs = parse_identity(text)
        assert lhs == identity.lhs, identity.name
        assert rhs == identity.rhs, identity.name


# --- random ASTs --------------------------------------------------------------

def _smart_negate(node):
    if isinstance(node, RationalConst):
        return RationalConst(-node.value)
    return Negate(node)


_atoms = st.one_of(
    st.sampled_from([
        A, B, Q, I, OMEGA,
        RootOfUnity(5, 2), RootOfUnity(8, 3), RootOfUnity(1, 0), RootOfUnity(6, 0),
    ]),
    st.builds(lambda n, d: RationalConst(Fraction(n, d)),
              st.integers(-9, 9), st.integers(1, 9)),
)


def _compound(children):
    return st.one_of(
        st.tuples(children, children).map(lambda t: ThetaCall(*t)),
        st.lists(children, min_size=2, max_size=3).map(lambda xs: Sum(tuple(xs))),
        st.lists(children, min_size=2, max_size=3).map(lambda xs: Product(tuple(xs))),
        st.tuples(children, st.integers(-3, 3)).map(lambda t: Power(*t)),
        children.map(_smart_negate),
        children.map(RealPart),
        children.map(ImagPart),
        children.map(SpecializeQ),
    )


ast_exprs = st.recursive(_atoms, _compound, max_leaves=10)


@given(ast_exprs)
@settings(max_examples=250, deadline=None)
def test_roundtrip_random_asts(ast):
    text = print_expr(ast)
    assert parse_expr(text) == ast


@given(ast_exprs)
@settings(max_examples=100, deadline=None)
def test_print_is_stable_after_one_parse(ast):
    text = print_expr(ast)
    assert print_expr(parse_expr(text)) == text
