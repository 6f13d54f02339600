"""Brute-force unifier search, used as ground truth for the other modules."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .terms import (
    App,
    Binding,
    Problem,
    Signature,
    Term,
    Var,
    is_unifier,
    render,
    size,
    unifies_body,
    var_names,
)


@lru_cache(maxsize=None)
def bodies_of_size(sig: Signature, nvars: int, n: int) -> tuple[Term, ...]:
    """Every first-order term with exactly ``n`` nodes over ``sig`` and ``x1..x_nvars``.

    Sorted by canonical print so enumeration order is deterministic.
    """
    if n < 1:
        return ()
    out: list[Term] = []
    if n == 1:
        out += [App(s.name) for s in sig.symbols if s.arity == 0]
        out += [Var(i) for i in range(1, nvars + 1)]
    for s in sig.symbols:
        if s.arity == 0 or s.arity > n - 1:
            continue
        for split in _compositions(n - 1, s.arity):
            pools = [bodies_of_size(sig, nvars, k) for k in split]
            out += [App(s.name, args) for args in itertools.product(*pools)]
    names = var_names(nvars) if nvars else []
    return tuple(sorted(out, key=lambda t: render(t, names)))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def graded_bodies(sig: Signature, nvars: int, size_bound: int):
    for n in range(1, size_bound + 1):
        yield from bodies_of_size(sig, nvars, n)


@dataclass
class OracleResult:
    unifiers: list[Binding]
    size_bound: int
    exhausted: bool
    tested: int = 0


def brute_force(problem: Problem, size_bound: int, max_bodies: int | None = None) -> OracleResult:
    """Test every body with at most ``size_bound`` nodes.

    ``max_bodies`` caps the work; hitting it leaves ``exhausted`` false.
    """
    found = []
    tested = 0
    for body in graded_bodies(problem.signature, problem.arity, size_bound):
        if max_bodies is not None and tested >= max_bodies:
            return OracleResult(found, size_bound, False, tested)
        tested += 1
        if unifies_body(problem, body):
            found.append(problem.binding(body))
    return OracleResult(found, size_bound, True, tested)


@dataclass
class DifferentialReport:
    verdict: object
    oracle: OracleResult
    disagreement: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return self.disagreement is None


def differential_check(problem: Problem, size_bound: int, budget: int) -> DifferentialReport:
    from .decider import NotInFragment, NotUnifiable, Unifiable, Unknown, decide

    verdict = decide(problem, budget)
    oracle = brute_force(problem, size_bound)
    report = DifferentialReport(verdict, oracle)
    if isinstance(verdict, Unifiable):
        sigma = verdict.binding
        if not is_unifier(problem, sigma):
            report.disagreement = f"decider returned a non-unifier {sigma}"
        elif size(sigma.body) <= size_bound and sigma not in oracle.unifiers:
            report.disagreement = f"oracle did not confirm {sigma}"
        elif size(sigma.body) > size_bound:
            report.notes.append("decider unifier larger than oracle bound")
    elif isinstance(verdict, NotUnifiable):
        if oracle.unifiers:
            report.disagreement = f"decider refuted, oracle found {oracle.unifiers[0]}"
    elif isinstance(verdict, NotInFragment):
        report.notes.append("decider abstained: not in fragment")
    elif isinstance(verdict, Unknown):
        report.notes.append(f"decider abstained: {verdict.reason}")
    return report
