import pytest
from hypothesis import given, settings

from conftest import problems
from sogu.decider import (
    CONSISTENT,
    CONTRADICTION,
    UNDERDETERMINED,
    FragmentError,
    NotInFragment,
    NotUnifiable,
    Unifiable,
    Unknown,
    decide,
    decide_report,
    enumerate_candidates,
    forced_counts,
    fragment_report,
    stability_check,
)
from sogu.oracle import bodies_of_size
from sogu.syntax import parse_file, parse_problem, parse_subst
from sogu.terms import Signature, Var, is_unifier, occ_sym, size

HEADER = "sig g/2 a/0 b/0\nfvar F/1\n"
SMALL = Signature.of(g=2, a=0, b=0)


def problem(*eqs, header=HEADER):
    return parse_problem(header + "".join(f"eq {e}\n" for e in eqs))


def test_fragment_report(ex5):
    rep = fragment_report(ex5)
    assert rep.witnesses == ("b",)
    assert rep.hU_safe == 3
    assert rep.hU_literal == 2
    assert rep.in_fragment and not rep.certified


def test_forced_counts(ex5):
    fc = forced_counts(ex5, 2)
    assert fc.status == CONSISTENT and dict(fc.counts) == {"a": 0, "b": 1}
    assert dict(forced_counts(ex5, 1).counts) == {"a": 0, "b": 0}
    assert forced_counts(ex5, 0).status == CONTRADICTION


def test_decide_worked_example(ex5):
    v = decide(ex5, 32)
    assert v == Unifiable(parse_subst("sub F(x) = g(b,g(x,x))", SMALL))


def test_identity_also_unifies_worked_example(ex5):
    # the h'=1 branch is not refuted; only the descending sweep prefers the two-hole body
    assert is_unifier(ex5, parse_subst("sub F(x) = x", SMALL))


def test_hole_bound_counterexample(ex5):
    """A four-hole unifier exists although hU_safe is 3."""
    sigma = parse_subst("sub F(x) = g(b,g(g(b,g(x,x)),g(b,g(x,x))))", SMALL)
    assert is_unifier(ex5, sigma)
    assert sigma.holes() == (4,)
    assert sigma.holes()[0] >= fragment_report(ex5).hU_safe


def test_not_in_fragment():
    p = problem("F(a) = F(a)")
    assert decide(p, 8) == NotInFragment()


def test_arity_two_is_rejected():
    p = parse_problem("sig g/2 a/0 b/0\nfvar F/2\neq F(a,b) = F(b,a)")
    with pytest.raises(FragmentError):
        decide(p, 4)


def test_underdetermined_branch_gives_unknown():
    p = problem("g(a,F(b)) = g(b,F(a))")
    tr = decide_report(p, 7)
    assert tr.fragment.certified
    assert tr.branches[0].forced.status == UNDERDETERMINED
    assert tr.verdict == Unknown("budget exhausted")


def test_certified_refutation():
    p = problem("g(a,F(F(a))) = g(b,F(b))")
    tr = decide_report(p, 12)
    assert tr.fragment.certified
    assert all(b.outcome in ("contradiction", "exhausted") for b in tr.branches)
    assert tr.verdict == NotUnifiable()


def test_stability_check(ex5):
    for h in range(3, 8):
        assert stability_check(ex5, "b", h)
    with pytest.raises(ValueError):
        stability_check(ex5, "b", 0)


def test_candidates_match_brute_force(ex5):
    """Consistent-branch enumeration equals filtering all bodies by counts."""
    fc = forced_counts(ex5, 2)
    got = [s.body for s in enumerate_candidates(SMALL, 2, fc, budget=9)]
    want = [
        body
        for n in range(1, 10)
        for body in bodies_of_size(SMALL, 1, n)
        if occ_sym(Var(1), body) == 2 and all(occ_sym(c, body) == k for c, k in fc.counts.items())
    ]
    assert sorted(map(str, got)) == sorted(map(str, want))
    assert got == sorted(got, key=size)


def test_candidate_caps(ex5):
    fc = forced_counts(ex5, 2)
    assert not enumerate_candidates(SMALL, 2, fc, budget=3).complete
    stream = enumerate_candidates(SMALL, 2, fc, budget=30, max_candidates=1)
    assert not stream.complete and stream.total <= 1


@settings(max_examples=40, deadline=None)
@given(problems(max_equations=2, max_leaves=5))
def test_unifiable_verdicts_are_unifiers(p):
    try:
        v = decide(p, 7, max_candidates=5_000)
    except FragmentError:
        return
    if isinstance(v, Unifiable):
        assert is_unifier(p, v.binding)
        assert size(v.binding.body) <= 7


def test_uncertified_bound_is_not_trusted(fixtures):
    p = parse_file((fixtures / "holebound.sogu").read_text()).problem
    rep = fragment_report(p)
    sigma = parse_subst("sub F(x) = g(s(x),s(g(x,x)))", p.signature)
    assert is_unifier(p, sigma)
    assert sigma.holes()[0] == rep.hU_safe == 3
    assert rep.mul_const == 1 and not rep.certified
    tr = decide_report(p, 9)
    # every branch below the bound is consistent and exhausted without a unifier
    assert [b.outcome for b in tr.branches] == ["exhausted"] * 3
    assert tr.verdict == Unknown("multiplicity bound not certified")
