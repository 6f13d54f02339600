import warnings

import pytest
from hypothesis import given

from conftest import FIXTURES, problems
from sogu.syntax import (
    ParseError,
    ValidationError,
    parse_file,
    parse_problem,
    parse_subst,
    parse_term,
    print_problem,
)
from sogu.terms import App, Signature, Var

SIG = Signature.of(g=2, a=0, b=0)


def test_parse_square_problem():
    p = parse_problem("sig g/2 a/0 b/0\nfvar F/1\neq F(g(a,a)) = g(F(a),F(a))")
    assert p.arity == 1 and len(p.equations) == 1
    assert str(p.equations[0]) == "F(g(a,a)) = g(F(a),F(a))"


def test_function_variable_is_declared_not_capitalized():
    p = parse_problem("sig G/2 a/0\nfvar h/1\neq h(a) = G(h(a),a)")
    assert p.fvar == "h"


def test_missing_fvar_is_invalid():
    with pytest.raises(ValidationError) as exc:
        parse_problem("sig g/2 a/0 b/0\neq a = a")
    assert any("must occur" in v for v in exc.value.violations)


def test_syntax_error_location():
    with pytest.raises(ParseError) as exc:
        parse_problem("sig g/2 a/0 b/0\nfvar F/1\neq F(a = a")
    assert exc.value.line == 3 and exc.value.column == 8


def test_duplicates_dropped_with_warning():
    text = "sig g/2 a/0 b/0\nfvar F/1\neq F(a) = F(b)\neq F(a) = F(b)\n"
    with pytest.warns(UserWarning):
        pf = parse_file(text)
    assert len(pf.problem.equations) == 1


def test_parse_subst():
    s = parse_subst("sub F(x) = g(b,g(x,x))", SIG)
    assert s.body == App("g", (App("b"), App("g", (Var(1), Var(1)))))
    assert str(s) == "sub F(x) = g(b,g(x,x))"
    s2 = parse_subst("sub F(u,v) = g(v,u)", SIG)
    assert s2.body == App("g", (Var(2), Var(1)))
    with pytest.raises(ParseError):
        parse_subst("sub F(x) = y", SIG)
    with pytest.raises(ParseError):
        parse_subst("sub F(x) = g(x)", SIG)


def test_parse_term_rejects_unknown_symbols():
    with pytest.raises(ParseError):
        parse_term("g(a,c)", SIG)


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.sogu")), ids=lambda p: p.name)
def test_fixture_round_trip(path):
    pf = parse_file(path.read_text())
    text = print_problem(pf.problem, pf.terms)
    again = parse_file(text)
    assert again.problem == pf.problem and again.terms == pf.terms
    assert print_problem(again.problem, again.terms) == text


@given(problems())
def test_print_parse_identity(p):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert parse_problem(print_problem(p)) == p
