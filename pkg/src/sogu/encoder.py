"""Compile integer polynomials into problems over ``{g/2, a/0, b/0}``.

Each monomial ``c·x1^k1···xn^kn`` becomes one equation whose two sides differ
only in the length of an ``a``-chain (the payload) sitting under every
``F``-nesting.  The counter difference for ``a`` then equals the polynomial,
while the multipliers of the two sides coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .counting import profile
from .poly import IntPoly
from .terms import App, Equation, FApp, Problem, Signature, Term

SIGNATURE = Signature.of(g=2, a=0, b=0)
A, B = App("a"), App("b")


def g(s: Term, t: Term) -> App:
    return App("g", (s, t))


def payload(m: int) -> Term:
    """``g(a, g(a, ... b))`` with ``m`` occurrences of ``a``."""
    t: Term = B
    for _ in range(m):
        t = g(A, t)
    return t


def encode_monomial(n: int, m: int, exps: Sequence[int], fvar: str = "F") -> Term:
    if n < 1 or len(exps) != n:
        raise ValueError(f"need {n} >= 1 exponents, got {len(exps)}")
    if m < 0 or any(k < 0 for k in exps):
        raise ValueError("payload count and exponents must be natural numbers")
    if not any(exps):
        return g(payload(m), FApp(fvar, (B,) * n))
    t = payload(m)
    for i in range(n, 0, -1):
        for _ in range(exps[i - 1]):
            args = [B] * n
            args[i - 1] = t
            t = g(FApp(fvar, tuple(args)), B)
    return t


@dataclass(frozen=True)
class EncodedProblem:
    problem: Problem
    source: IntPoly


def encode_poly(p: IntPoly, fvar: str = "F") -> EncodedProblem:
    n = p.nvars
    if n < 1:
        raise ValueError("polynomial needs at least one variable")
    eqs = []
    for c, e in p.monomials():
        if c < 0:
            eqs.append(Equation(encode_monomial(n, -c + 1, e, fvar), encode_monomial(n, 1, e, fvar)))
        else:
            eqs.append(Equation(encode_monomial(n, 1, e, fvar), encode_monomial(n, c + 1, e, fvar)))
    return EncodedProblem(Problem(SIGNATURE, fvar, n, tuple(eqs)), p)


def verify_encoding(enc: EncodedProblem) -> bool:
    prof = profile(enc.problem)
    if prof.nvars != enc.source.nvars:
        return False
    return (
        prof.cnt_diff("a") == enc.source
        and prof.mul_diff.is_zero()
        and prof.cnt_diff("b").is_zero()
    )
