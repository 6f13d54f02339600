import itertools

import pytest
from hypothesis import given, settings

from conftest import polys
from sogu.counting import profile
from sogu.encoder import encode_monomial, encode_poly, payload, verify_encoding
from sogu.poly import IntPoly, parse_poly
from sogu.syntax import parse_term
from sogu.terms import occ_sym, validate_problem


def test_payload_is_an_a_chain():
    assert payload(0) == parse_term("b")
    assert payload(2) == parse_term("g(a,g(a,b))")
    assert occ_sym("a", payload(7)) == 7


def test_monomial_shapes():
    assert encode_monomial(1, 1, (1,)) == parse_term("g(F(g(a,b)),b)", fvar="F")
    assert encode_monomial(2, 0, (0, 0)) == parse_term("g(b,F(b,b))", fvar="F")
    assert encode_monomial(2, 1, (1, 1)) == parse_term("g(F(g(F(b,g(a,b)),b),b),b)", fvar="F")
    with pytest.raises(ValueError):
        encode_monomial(2, 1, (1,))


def test_pythagorean_encoding():
    enc = encode_poly(parse_poly("x1^2 + x2^2 - x3^2"))
    assert verify_encoding(enc)
    assert len(enc.problem.equations) == 3
    assert validate_problem(enc.problem) == []


def test_constant_polynomial():
    enc = encode_poly(IntPoly.constant(2, -4))
    assert verify_encoding(enc)
    assert profile(enc.problem).cnt_diff("a").eval((7, 9)) == -4


def test_zero_polynomial_has_no_equations():
    enc = encode_poly(IntPoly.zero(1))
    assert enc.problem.equations == ()
    assert verify_encoding(enc)


@settings(max_examples=60)
@given(polys())
def test_counter_difference_evaluates_polynomial(p):
    enc = encode_poly(p)
    assert verify_encoding(enc)
    diff = profile(enc.problem).cnt_diff("a")
    for h in itertools.product(range(4), repeat=p.nvars):
        assert diff.eval(h) == p.eval(h)
