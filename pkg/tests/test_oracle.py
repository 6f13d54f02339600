import random

from sogu.corpus import SMALL, unifiable_problem, unsatisfiable_problem
from sogu.oracle import bodies_of_size, brute_force, differential_check
from sogu.syntax import parse_problem
from sogu.terms import Signature, is_unifier, size


def _catalan(n):
    from math import comb

    return comb(2 * n, n) // (n + 1)


def test_body_counts_match_closed_form():
    # binary trees with k internal nodes and k+1 leaves drawn from 3 leaf kinds
    for k in range(4):
        assert len(bodies_of_size(SMALL, 1, 2 * k + 1)) == _catalan(k) * 3 ** (k + 1)
        assert bodies_of_size(SMALL, 1, 2 * k + 2) == ()


def test_bodies_are_distinct_and_sized():
    sig = Signature.of(g=2, s=1, a=0)
    for n in range(1, 7):
        bs = bodies_of_size(sig, 2, n)
        assert len(set(bs)) == len(bs)
        assert all(size(b) == n for b in bs)


def test_worked_example_unifiers(ex5):
    res = brute_force(ex5, 7)
    assert res.exhausted
    assert [str(s) for s in res.unifiers] == ["sub F(x) = x", "sub F(x) = g(b,g(x,x))"]


def test_max_bodies_cap(ex5):
    res = brute_force(ex5, 9, max_bodies=10)
    assert not res.exhausted and res.tested == 10


def test_constructed_problems():
    rng = random.Random(3)
    for _ in range(20):
        p, sigma = unifiable_problem(rng, SMALL, body_size=4, term_size=6)
        assert is_unifier(p, sigma)
        assert brute_force(p, size(sigma.body)).unifiers
    for _ in range(20):
        p = unsatisfiable_problem(rng, SMALL)
        assert brute_force(p, 7).unifiers == []


def test_differential_report(ex5):
    rep = differential_check(ex5, 7, 16)
    assert rep.agree
    clash = parse_problem("sig g/2 a/0 b/0\nfvar F/1\neq g(a,F(F(a))) = g(b,F(b))")
    assert differential_check(clash, 7, 12).agree
