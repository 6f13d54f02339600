"""Deciding unary problems in the bounded-congruence fragment.

Pipeline for a problem ``P`` with ``F`` of arity 1:

1. ``fragment_report`` reads the constant terms of the multiplier and counter
   differences, decides fragment membership and derives the multiplicity
   bound ``hU_safe``.
2. For each candidate multiplicity ``h' < hU_safe``, ``forced_counts`` solves
   the unification condition exactly for the base-symbol counts of the body.
3. ``enumerate_candidates`` lists the bodies with those counts; each one is
   checked with ``is_unifier``.

The bound only rules out bodies with ``h' >= hU_safe`` when some witness
symbol has a zero multiplier constant term (see ``FragmentReport.certified``).
Without that certificate a failed sweep is reported as ``Unknown``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping

from .counting import profile
from .terms import App, Binding, Problem, Signature, Term, Var, is_unifier, render

DEFAULT_MAX_CANDIDATES = 200_000


class FragmentError(ValueError):
    pass


def _require_unary(problem: Problem):
    if problem.arity != 1:
        raise FragmentError(f"decider needs arity 1, got {problem.arity}")


@dataclass(frozen=True)
class FragmentReport:
    hU_literal: int
    hU_safe: int | None
    witnesses: tuple[str, ...]
    mul_const: int
    cnt_consts: Mapping[str, int]

    @property
    def in_fragment(self) -> bool:
        return bool(self.witnesses)

    @property
    def certified(self) -> bool:
        """True when ``hU_safe`` provably bounds the hole count of every unifier.

        A witness ``c`` with zero multiplier constant gives, for ``h >= hU_safe``,
        ``k·D(h) ≡ 0`` but ``N_c(h) ≡ N_c ≢ 0 (mod h)``.  With a nonzero
        multiplier constant, ``N_c ≡ k·M (mod h)`` stays solvable for ``k >= 2``.
        """
        return self.in_fragment and self.mul_const == 0


def fragment_report(problem: Problem) -> FragmentReport:
    _require_unary(problem)
    prof = profile(problem)
    m = prof.mul_diff.constant_term()
    ns = {c: prof.cnt_diff(c).constant_term() for c in prof.symbols()}
    literal = max([0, m + 1] + [nc + 1 for nc in ns.values()])
    witnesses = tuple(c for c, nc in ns.items() if nc != 0 and nc - m != 0)
    safe = None
    if witnesses:
        safe = 1 + min(max(abs(ns[c] - m), abs(ns[c])) for c in witnesses)
    return FragmentReport(literal, safe, witnesses, m, ns)


def stability_check(problem: Problem, c: str, h: int) -> bool:
    """Counter and multiplier differences agree with their constant terms mod ``h``."""
    if h < 1:
        raise ValueError("h must be >= 1")
    _require_unary(problem)
    prof = profile(problem)
    n_poly, d_poly = prof.cnt_diff(c), prof.mul_diff
    return (n_poly.eval((h,)) - n_poly.constant_term()) % h == 0 and (
        d_poly.eval((h,)) - d_poly.constant_term()
    ) % h == 0


CONSISTENT = "consistent"
CONTRADICTION = "contradiction"
UNDERDETERMINED = "underdetermined"


@dataclass(frozen=True)
class ForcedCounts:
    hprime: int
    status: str
    counts: Mapping[str, int] = field(default_factory=dict)
    free: frozenset[str] = frozenset()
    symbol: str | None = None
    reason: str = ""


def forced_counts(problem: Problem, hprime: int) -> ForcedCounts:
    _require_unary(problem)
    prof = profile(problem)
    d = prof.mul_diff.eval((hprime,))
    counts, free = {}, set()
    for c in prof.symbols():
        nc = prof.cnt_diff(c).eval((hprime,))
        if d == 0:
            if nc != 0:
                return ForcedCounts(
                    hprime, CONTRADICTION, symbol=c, reason=f"D=0 but N_{c}={nc}"
                )
            free.add(c)
        elif nc % d or nc // d < 0:
            return ForcedCounts(
                hprime, CONTRADICTION, symbol=c,
                reason=f"N_{c}={nc} is not a nonnegative multiple of D={d}",
            )
        else:
            counts[c] = nc // d
    if d == 0:
        return ForcedCounts(hprime, UNDERDETERMINED, free=frozenset(free))
    return ForcedCounts(hprime, CONSISTENT, counts=counts)


# Candidate bodies.  A tree over symbols with arities a_i and multiplicities
# n_i exists iff sum n_i·(a_i - 1) == -1 (bound variables count as arity 0).

HOLE = "__x__"


@lru_cache(maxsize=None)
def _trees(alphabet: tuple[tuple[str, int], ...], ms: tuple[int, ...]) -> tuple[Term, ...]:
    out: list[Term] = []
    for i, (name, ar) in enumerate(alphabet):
        if not ms[i]:
            continue
        rest = ms[:i] + (ms[i] - 1,) + ms[i + 1 :]
        if ar == 0:
            if not any(rest):
                out.append(Var(1) if name == HOLE else App(name))
            continue
        for parts in _splits(alphabet, rest, ar):
            pools = [_trees(alphabet, p) for p in parts]
            out += [App(name, args) for args in itertools.product(*pools)]
    return tuple(out)


def _weight(alphabet, ms) -> int:
    return sum(k * (ar - 1) for (_, ar), k in zip(alphabet, ms))


def _splits(alphabet, ms, r):
    """Ordered splits of ``ms`` into ``r`` parts that are each tree multisets."""
    if r == 1:
        if _weight(alphabet, ms) == -1:
            yield (ms,)
        return
    for first in itertools.product(*(range(k + 1) for k in ms)):
        if _weight(alphabet, first) != -1:
            continue
        rest = tuple(a - b for a, b in zip(ms, first))
        for tail in _splits(alphabet, rest, r - 1):
            yield (first,) + tail


@lru_cache(maxsize=None)
def _count_trees(alphabet, ms) -> int:
    total = 0
    for i, (_, ar) in enumerate(alphabet):
        if not ms[i]:
            continue
        rest = ms[:i] + (ms[i] - 1,) + ms[i + 1 :]
        if ar == 0:
            total += not any(rest)
            continue
        for parts in _splits(alphabet, rest, ar):
            prod = 1
            for p in parts:
                prod *= _count_trees(alphabet, p)
            total += prod
    return total


@lru_cache(maxsize=None)
def _holed(sig: Signature, n: int, k: int) -> tuple[Term, ...]:
    """Bodies with exactly ``n`` nodes and ``k`` occurrences of the bound variable."""
    if n < 1 or k < 0 or k > n:
        return ()
    out: list[Term] = []
    if n == 1:
        if k == 1:
            out.append(Var(1))
        else:
            out += [App(s.name) for s in sig.symbols if s.arity == 0]
    for s in sig.symbols:
        if s.arity == 0 or s.arity > n - 1:
            continue
        for sizes in _compositions(n - 1, s.arity):
            for holes in _compositions0(k, s.arity):
                pools = [_holed(sig, a, b) for a, b in zip(sizes, holes)]
                out += [App(s.name, args) for args in itertools.product(*pools)]
    return tuple(out)


@lru_cache(maxsize=None)
def _count_holed(sig: Signature, n: int, k: int) -> int:
    if n < 1 or k < 0 or k > n:
        return 0
    total = 0
    if n == 1:
        total += 1 if k == 1 else len(sig.constants())
    for s in sig.symbols:
        if s.arity == 0 or s.arity > n - 1:
            continue
        for sizes in _compositions(n - 1, s.arity):
            for holes in _compositions0(k, s.arity):
                prod = 1
                for a, b in zip(sizes, holes):
                    prod *= _count_holed(sig, a, b)
                total += prod
    return total


def _compositions(total, parts):
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _compositions0(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions0(total - first, parts - 1):
            yield (first,) + rest


def _sorted(terms) -> list[Term]:
    return sorted(terms, key=lambda t: render(t, ["x"]))


def _higher_counts(arities: list[int], leaves: int) -> Iterator[tuple[int, ...]]:
    """Counts of symbols with arity >= 2 that close a tree with ``leaves`` leaves."""
    target = leaves - 1
    if target < 0:
        return
    ranges = [range(target // (a - 1) + 1) for a in arities]
    for combo in itertools.product(*ranges):
        if sum(k * (a - 1) for k, a in zip(combo, arities)) == target:
            yield combo


@dataclass
class CandidateStream:
    """Candidate bindings in graded order; ``complete`` is known up front."""

    groups: list  # [(size, thunk)] in size order
    complete: bool
    total: int
    fvar: str = "F"

    def __iter__(self) -> Iterator[Binding]:
        for _, make in self.groups:
            for body in make():
                yield Binding(self.fvar, 1, body)


def enumerate_candidates(
    sig: Signature,
    hprime: int,
    fc: ForcedCounts,
    budget: int,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    fvar: str = "F",
) -> CandidateStream:
    """Bodies with ``hprime`` holes matching ``fc``, by size then print order.

    ``budget`` caps body size; ``max_candidates`` caps the number of bodies.
    The stream is complete only when neither cap cut anything off.
    """
    if fc.status == CONTRADICTION:
        return CandidateStream([], True, 0, fvar)
    groups, total, complete = [], 0, True

    if fc.status == CONSISTENT:
        base = [s for s in sig.symbols if s.arity <= 1]
        higher = [s for s in sig.symbols if s.arity >= 2]
        alphabet = tuple((s.name, s.arity) for s in base + higher) + ((HOLE, 0),)
        leaves = sum(fc.counts.get(s.name, 0) for s in base if s.arity == 0) + hprime
        fixed = tuple(fc.counts.get(s.name, 0) for s in base)
        by_size: dict[int, list[tuple[int, ...]]] = {}
        for combo in _higher_counts([s.arity for s in higher], leaves):
            ms = fixed + combo + (hprime,)
            by_size.setdefault(sum(ms), []).append(ms)
        for n in sorted(by_size):
            count = sum(_count_trees(alphabet, ms) for ms in by_size[n])
            if n > budget or total + count > max_candidates:
                complete = False
                break
            total += count
            mss = by_size[n]
            groups.append((n, lambda mss=mss: _sorted(t for ms in mss for t in _trees(alphabet, ms))))
        return CandidateStream(groups, complete, total, fvar)

    # Underdetermined: every base-symbol count is free, so the size is unbounded.
    complete = False
    for n in range(1, budget + 1):
        count = _count_holed(sig, n, hprime)
        if total + count > max_candidates:
            break
        total += count
        if count:
            groups.append((n, lambda n=n: _sorted(_holed(sig, n, hprime))))
    return CandidateStream(groups, complete, total, fvar)


@dataclass(frozen=True)
class Unifiable:
    binding: Binding


@dataclass(frozen=True)
class NotUnifiable:
    pass


@dataclass(frozen=True)
class Unknown:
    reason: str


@dataclass(frozen=True)
class NotInFragment:
    pass


Verdict = Unifiable | NotUnifiable | Unknown | NotInFragment


@dataclass
class Branch:
    hprime: int
    forced: ForcedCounts
    outcome: str  # contradiction | unifier | exhausted | truncated | skipped
    tested: int = 0


@dataclass
class DecisionTrace:
    fragment: FragmentReport
    branches: list[Branch]
    verdict: Verdict

    @property
    def tested(self) -> int:
        return sum(b.tested for b in self.branches)


def decide_report(
    problem: Problem, budget: int, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> DecisionTrace:
    """Run the decision procedure and keep the per-multiplicity trace.

    Multiplicities are swept from ``hU_safe - 1`` down to 0 and the first
    unifier found is returned; later branches are recorded as skipped.
    """
    rep = fragment_report(problem)
    if not rep.in_fragment:
        return DecisionTrace(rep, [], NotInFragment())
    branches: list[Branch] = []
    found: Binding | None = None
    truncated = False
    for hp in range(rep.hU_safe - 1, -1, -1):
        fc = forced_counts(problem, hp)
        if found is not None:
            branches.append(Branch(hp, fc, "skipped"))
            continue
        if fc.status == CONTRADICTION:
            branches.append(Branch(hp, fc, "contradiction"))
            continue
        stream = enumerate_candidates(
            problem.signature, hp, fc, budget, max_candidates, problem.fvar
        )
        branch = Branch(hp, fc, "exhausted" if stream.complete else "truncated")
        for sigma in stream:
            branch.tested += 1
            if is_unifier(problem, sigma):
                found = sigma
                branch.outcome = "unifier"
                break
        truncated |= branch.outcome == "truncated"
        branches.append(branch)

    if found is not None:
        assert is_unifier(problem, found)
        verdict: Verdict = Unifiable(found)
    elif truncated:
        verdict = Unknown("budget exhausted")
    elif not rep.certified:
        verdict = Unknown("multiplicity bound not certified")
    else:
        verdict = NotUnifiable()
    return DecisionTrace(rep, branches, verdict)


def decide(problem: Problem, budget: int, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> Verdict:
    return decide_report(problem, budget, max_candidates).verdict
