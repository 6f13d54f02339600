import pytest
from hypothesis import given

from conftest import bindings, ground_terms, problems, sog_terms
from sogu.syntax import parse_term
from sogu.terms import (
    App,
    Binding,
    Equation,
    FApp,
    Problem,
    Signature,
    TermError,
    Var,
    apply,
    depth,
    is_ground,
    is_unifier,
    occ_sym,
    occ_term,
    positions,
    size,
    subterm_at,
    unifies_body,
    validate_problem,
)

SIG = Signature.of(g=2, s=1, a=0, b=0)


def t(text):
    return parse_term(text, fvar="F")


def test_positions_and_subterms():
    u = t("g(a,g(b,a))")
    assert positions(u) == {(), (1,), (2,), (2, 1), (2, 2)}
    assert subterm_at(u, (2, 1)) == App("b")
    with pytest.raises(TermError):
        subterm_at(u, (3,))
    with pytest.raises(TermError):
        subterm_at(u, (1, 1))


def test_size_depth_counts():
    u = t("g(a,g(b,a))")
    assert size(u) == 5
    assert depth(App("a")) == 1
    assert depth(u) == 3
    assert occ_sym("a", u) == 2
    assert occ_term(App("a"), u) == 2
    assert occ_sym(Var(1), App("g", (App("b"), App("g", (Var(1), Var(1)))))) == 2


def test_apply_instantiates_arguments_first():
    sigma = Binding("F", 1, App("g", (Var(1), Var(1))))
    assert apply(t("F(F(a))"), sigma) == t("g(g(a,a),g(a,a))")


def test_binding_rejects_bad_bodies():
    with pytest.raises(TermError):
        Binding("F", 1, Var(2))
    with pytest.raises(TermError):
        Binding("F", 1, FApp("F", (App("a"),)))


def test_apply_rejects_foreign_variable():
    with pytest.raises(TermError):
        apply(FApp("G", (App("a"),)), Binding("F", 1, Var(1)))


def test_square_problem_unifiers():
    p = Problem(SIG, "F", 1, (Equation(t("F(g(a,a))"), t("g(F(a),F(a))")),))
    assert is_unifier(p, Binding("F", 1, App("g", (Var(1), Var(1)))))
    assert is_unifier(p, Binding("F", 1, Var(1)))
    assert not is_unifier(p, Binding("F", 1, App("s", (Var(1),))))


def test_validation_messages():
    assert validate_problem(Problem(SIG, "F", 1, (Equation(t("F(a)"), t("g(a,F(b))")),))) == []
    bad = Problem(SIG, "F", 1, (Equation(App("a"), App("a")),))
    assert any("must occur on both sides" in v for v in validate_problem(bad))
    bad = Problem(SIG, "F", 1, (Equation(t("F(a,b)"), t("F(c)")),))
    vs = validate_problem(bad)
    assert any("arity" in v for v in vs) and any("unknown symbol c" in v for v in vs)
    assert any("clashes" in v for v in validate_problem(Problem(SIG, "g", 1, ())))


@given(ground_terms())
def test_ground_terms_are_ground(u):
    assert is_ground(u)
    assert len(positions(u)) == size(u)


@given(sog_terms(), bindings())
def test_apply_removes_function_variable(u, sigma):
    assert is_ground(apply(u, sigma))


@given(problems(max_leaves=5), bindings(Signature.of(g=2, a=0, b=0), max_leaves=6))
def test_lazy_comparison_matches_instantiation(p, sigma):
    eager = all(apply(e.lhs, sigma) == apply(e.rhs, sigma) for e in p.equations)
    assert unifies_body(p, sigma.body) == eager


@given(sog_terms(), bindings())
def test_subterm_at_every_position(u, sigma):
    v = apply(u, sigma)
    for p in positions(v):
        w = subterm_at(v, p)
        assert size(w) <= size(v)
