import itertools

import pytest
from hypothesis import given, settings

from conftest import problems
from sogu.encoder import encode_poly
from sogu.equalizer import equalize, is_witness, solve_count
from sogu.poly import parse_poly


def test_solve_count():
    assert solve_count(-1, -3) == 3
    assert solve_count(2, 3) is None
    assert solve_count(2, -4) is None
    assert solve_count(0, 0) == 0
    assert solve_count(0, 5) is None


def test_worked_example_witness(ex5):
    ws = equalize(ex5, 4)
    assert any(w.hs == (2,) and dict(w.counts) == {"a": 0, "b": 1} for w in ws)
    assert is_witness(ex5, (2,), {"a": 0, "b": 1})
    assert not is_witness(ex5, (3,), {"a": 0, "b": 1})


def test_pythagorean_roots():
    enc = encode_poly(parse_poly("x1^2 + x2^2 - x3^2"))
    got = {w.hs for w in equalize(enc.problem, 5, ["a"])}
    want = {h for h in itertools.product(range(6), repeat=3) if h[0] ** 2 + h[1] ** 2 == h[2] ** 2}
    assert got == want
    assert (3, 4, 5) in got


def test_rejects_bad_arguments(ex5):
    with pytest.raises(ValueError):
        equalize(ex5, -1)
    with pytest.raises(ValueError):
        equalize(ex5, 3, ["g"])


@settings(max_examples=50)
@given(problems())
def test_witnesses_satisfy_the_condition(p):
    for w in equalize(p, 4):
        assert is_witness(p, w.hs, w.counts)
