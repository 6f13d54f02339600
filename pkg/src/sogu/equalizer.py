"""Bounded search for multiplicities satisfying the unification condition.

Finding such multiplicities is undecidable in general, so the search is always
bounded; an empty result only means the box ``[0, bound]^n`` holds no witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .counting import condition_at, profile
from .terms import Problem


@dataclass(frozen=True)
class EqualizerWitness:
    hs: tuple[int, ...]
    counts: Mapping[str, int] = field(default_factory=dict)


def solve_count(d: int, diff: int) -> int | None:
    """Smallest ``k >= 0`` with ``k·d == diff``, or None."""
    if d == 0:
        return 0 if diff == 0 else None
    if diff % d:
        return None
    k = diff // d
    return k if k >= 0 else None


def equalize(
    problem: Problem, bound: int, symbols: Sequence[str] | None = None
) -> list[EqualizerWitness]:
    if bound < 0:
        raise ValueError("bound must be >= 0")
    prof = profile(problem)
    syms = list(symbols) if symbols is not None else prof.symbols()
    unknown = [c for c in syms if c not in prof.cnt_l]
    if unknown:
        raise ValueError(f"not base symbols of the signature: {', '.join(unknown)}")
    d_poly = prof.mul_diff
    n_polys = {c: prof.cnt_diff(c) for c in syms}
    out = []
    box = itertools.product(range(bound + 1), repeat=problem.arity)
    for h in sorted(box, key=lambda h: (sum(h), h)):
        d = d_poly.eval(h)
        counts = {}
        for c, q in n_polys.items():
            k = solve_count(d, q.eval(h))
            if k is None:
                break
            counts[c] = k
        else:
            out.append(EqualizerWitness(h, counts))
    return out


def is_witness(problem: Problem, hs: Sequence[int], counts: Mapping[str, int]) -> bool:
    return condition_at(problem, hs, counts)
