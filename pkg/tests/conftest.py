from pathlib import Path

import pytest
from hypothesis import strategies as st

from sogu.corpus import SMALL, UNARY
from sogu.poly import IntPoly
from sogu.syntax import parse_file
from sogu.terms import App, Binding, Equation, FApp, Problem, Var, fvars

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture
def ex5() -> Problem:
    return parse_file((FIXTURES / "ex5.sogu").read_text()).problem


def ground_terms(sig=UNARY, max_leaves=8):
    consts = [App(c) for c in sig.constants()]
    funcs = [s for s in sig.symbols if s.arity >= 1]

    def extend(children):
        return st.one_of(
            [st.tuples(*[children] * s.arity).map(lambda a, s=s: App(s.name, a)) for s in funcs]
        )

    return st.recursive(st.sampled_from(consts), extend, max_leaves=max_leaves)


def sog_terms(sig=UNARY, n=1, fvar="F", max_leaves=8):
    """Terms mixing signature symbols and applications of ``fvar``/``n``."""
    consts = [App(c) for c in sig.constants()]
    funcs = [s for s in sig.symbols if s.arity >= 1]

    def extend(children):
        apps = [st.tuples(*[children] * s.arity).map(lambda a, s=s: App(s.name, a)) for s in funcs]
        fapp = st.tuples(*[children] * n).map(lambda a: FApp(fvar, a))
        return st.one_of(apps + [fapp, fapp])

    return st.recursive(st.sampled_from(consts), extend, max_leaves=max_leaves)


def bodies(sig=UNARY, n=1, max_leaves=8):
    leaves = [App(c) for c in sig.constants()] + [Var(i) for i in range(1, n + 1)]
    funcs = [s for s in sig.symbols if s.arity >= 1]

    def extend(children):
        return st.one_of(
            [st.tuples(*[children] * s.arity).map(lambda a, s=s: App(s.name, a)) for s in funcs]
        )

    return st.recursive(st.sampled_from(leaves), extend, max_leaves=max_leaves)


def bindings(sig=UNARY, n=1, fvar="F", max_leaves=8):
    return bodies(sig, n, max_leaves).map(lambda b: Binding(fvar, n, b))


@st.composite
def problems(draw, sig=SMALL, n=1, max_equations=3, max_leaves=6):
    """Well-formed problems: ``F`` on both sides of every equation."""
    t = sog_terms(sig, n, max_leaves=max_leaves).filter(lambda u: bool(fvars(u)))
    eqs = draw(st.lists(st.tuples(t, t), min_size=1, max_size=max_equations))
    return Problem(sig, "F", n, tuple(Equation(a, b) for a, b in eqs))


@st.composite
def polys(draw, nvars=None, max_deg=3, max_coeff=5, max_terms=4):
    n = draw(st.integers(1, 3)) if nvars is None else nvars
    exps = st.tuples(*[st.integers(0, max_deg)] * n).filter(lambda e: sum(e) <= max_deg)
    coeff = st.integers(-max_coeff, max_coeff).filter(bool)
    terms = draw(st.dictionaries(exps, coeff, max_size=max_terms))
    return IntPoly(n, terms)


ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
