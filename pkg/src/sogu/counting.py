"""Multiplier and counter polynomials of terms and problems.

For a term ``t`` over the function variable ``F`` of arity ``n``:

* ``mul_sym`` counts how many copies of a binding body ``F ↦ λx̄.s`` appear in
  ``tσ`` when ``x_i`` occurs ``h_i`` times in ``s``;
* ``cnt_sym`` counts the occurrences of a base symbol ``c`` in ``tσ`` that are
  contributed by ``t`` itself.

Together ``occ(c, tσ) = occ(c, s)·mul + cnt`` at ``h_i = occ(x_i, s)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Mapping, Sequence

from .poly import IntPoly
from .terms import App, Binding, FApp, Problem, Term, TermError, Var, apply, head, iter_positions, occ_sym


def mul_sym(t: Term, fvar: str, n: int) -> IntPoly:
    h = [IntPoly.var(n, i) for i in range(1, n + 1)]

    def go(u: Term) -> IntPoly:
        if isinstance(u, App):
            return sum((go(a) for a in u.args), IntPoly.zero(n))
        if isinstance(u, FApp):
            _check_fapp(u, fvar, n)
            return sum((hi * go(a) for hi, a in zip(h, u.args)), IntPoly.constant(n, 1))
        raise TermError(f"unexpected bound variable {u}")

    return go(t)


def cnt_sym(t: Term, c: str, fvar: str, n: int) -> IntPoly:
    h = [IntPoly.var(n, i) for i in range(1, n + 1)]

    def go(u: Term) -> IntPoly:
        if isinstance(u, App):
            rest = sum((go(a) for a in u.args), IntPoly.zero(n))
            if u.sym != c:
                return rest
            if len(u.args) > 1:
                raise TermError(f"{c} is not a base symbol (arity {len(u.args)})")
            return rest + 1
        if isinstance(u, FApp):
            _check_fapp(u, fvar, n)
            return sum((hi * go(a) for hi, a in zip(h, u.args)), IntPoly.zero(n))
        raise TermError(f"unexpected bound variable {u}")

    return go(t)


def _check_fapp(u: FApp, fvar: str, n: int):
    if u.fvar != fvar:
        raise TermError(f"foreign function variable {u.fvar}")
    if len(u.args) != n:
        raise TermError(f"{fvar} expects {n} arguments, got {len(u.args)}")


@dataclass(frozen=True)
class CountingProfile:
    nvars: int
    mul_l: IntPoly
    mul_r: IntPoly
    cnt_l: Mapping[str, IntPoly]
    cnt_r: Mapping[str, IntPoly]

    @cached_property
    def mul_diff(self) -> IntPoly:
        """``mul_l - mul_r``"""
        return self.mul_l - self.mul_r

    @cached_property
    def _cnt_diffs(self) -> dict[str, IntPoly]:
        return {c: self.cnt_r[c] - self.cnt_l[c] for c in self.cnt_l}

    def cnt_diff(self, c: str) -> IntPoly:
        """``cnt_r(c) - cnt_l(c)``"""
        return self._cnt_diffs[c]

    def symbols(self) -> list[str]:
        return list(self.cnt_l)


@lru_cache(maxsize=512)
def profile(problem: Problem) -> CountingProfile:
    n = problem.arity
    zero = IntPoly.zero(n)
    base = problem.signature.base_symbols()
    mul_l, mul_r = zero, zero
    cnt_l = {c: zero for c in base}
    cnt_r = {c: zero for c in base}
    for e in problem.equations:
        mul_l += mul_sym(e.lhs, problem.fvar, n)
        mul_r += mul_sym(e.rhs, problem.fvar, n)
        for c in base:
            cnt_l[c] += cnt_sym(e.lhs, c, problem.fvar, n)
            cnt_r[c] += cnt_sym(e.rhs, c, problem.fvar, n)
    return CountingProfile(n, mul_l, mul_r, cnt_l, cnt_r)


def body_counts(sigma: Binding, symbols: Sequence[str]) -> tuple[tuple[int, ...], dict[str, int]]:
    """Bound-variable multiplicities and base-symbol counts of a binding body."""
    heads = Counter(head(u) for _, u in iter_positions(sigma.body))
    holes = tuple(heads[Var(i)] for i in range(1, sigma.arity + 1))
    return holes, {c: heads[c] for c in symbols}


def occurrence_identity(t: Term, sigma: Binding, c: str) -> tuple[int, int]:
    """``(occ(c, tσ), occ(c, s)·mul + cnt)``, the two sides of the occurrence identity."""
    lhs = occ_sym(c, apply(t, sigma))
    hs = sigma.holes()
    m = mul_sym(t, sigma.fvar, sigma.arity).eval(hs)
    k = cnt_sym(t, c, sigma.fvar, sigma.arity).eval(hs)
    return lhs, occ_sym(c, sigma.body) * m + k


def condition_at(problem: Problem, hs: Sequence[int], counts: Mapping[str, int]) -> bool:
    """Aggregate unification condition at multiplicities ``hs``.

    Symbols missing from ``counts`` are treated as count 0.
    """
    if len(hs) != problem.arity:
        raise ValueError(f"expected {problem.arity} multiplicities, got {len(hs)}")
    prof = profile(problem)
    d = prof.mul_diff.eval(hs)
    return all(counts.get(c, 0) * d == prof.cnt_diff(c).eval(hs) for c in prof.symbols())


def _per_equation(problem: Problem, hs, counts) -> bool:
    return all(condition_at(single, hs, counts) for single in problem.parts)


def unification_condition(problem: Problem, sigma: Binding) -> bool:
    """Necessary condition for ``sigma`` to unify ``problem``.

    Checked per equation and summed over the problem.
    """
    if sigma.fvar != problem.fvar or sigma.arity != problem.arity:
        return False
    hs, counts = body_counts(sigma, problem.signature.base_symbols())
    return _per_equation(problem, hs, counts) and condition_at(problem, hs, counts)
