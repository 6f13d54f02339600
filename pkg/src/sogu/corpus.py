"""Seeded random generators for terms, bindings and problems.

Unifiable problems are built by applying a random binding to a random term and
folding parts of the result back into applications of ``F``.  Unsatisfiable
problems carry a rigid head clash or a strict-subterm cycle.
"""

from __future__ import annotations

import random

from .terms import App, Binding, Equation, FApp, Problem, Signature, Term, Var, apply, fvars

SMALL = Signature.of(g=2, a=0, b=0)
UNARY = Signature.of(g=2, s=1, a=0, b=0)


def random_ground(rng: random.Random, sig: Signature, size: int) -> Term:
    """A ground term with at most ``size`` nodes."""
    return _random_term(rng, sig, size, leaves=lambda: App(rng.choice(sig.constants())))


def random_body(rng: random.Random, sig: Signature, nvars: int, size: int) -> Term:
    def leaf():
        if nvars and rng.random() < 0.5:
            return Var(rng.randint(1, nvars))
        return App(rng.choice(sig.constants()))

    return _random_term(rng, sig, size, leaves=leaf)


def _random_term(rng, sig, size, leaves) -> Term:
    funcs = [s for s in sig.symbols if s.arity >= 1 and s.arity < size]
    if size <= 1 or not funcs or rng.random() < 0.25:
        return leaves()
    f = rng.choice(funcs)
    budget = size - 1
    args = []
    for i in range(f.arity):
        share = max(1, budget // (f.arity - i)) if i < f.arity - 1 else max(1, budget)
        k = rng.randint(1, share)
        budget -= k
        args.append(_random_term(rng, sig, k, leaves))
    return App(f.name, tuple(args))


def random_sog(rng: random.Random, sig: Signature, fvar: str, n: int, size: int) -> Term:
    """A term over ``sig`` with applications of ``fvar``; ``fvar`` occurs at least once."""
    for _ in range(100):
        t = _random_sog(rng, sig, fvar, n, size)
        if fvar in fvars(t):
            return t
    return FApp(fvar, tuple(App(sig.constants()[0]) for _ in range(n)))


def _random_sog(rng, sig, fvar, n, size) -> Term:
    if size <= n or rng.random() < 0.2:
        return App(rng.choice(sig.constants()))
    if rng.random() < 0.4:
        budget = size - 1
        args = []
        for i in range(n):
            k = rng.randint(1, max(1, budget - (n - i - 1)))
            budget -= k
            args.append(_random_sog(rng, sig, fvar, n, k))
        return FApp(fvar, tuple(args))
    funcs = [s for s in sig.symbols if 1 <= s.arity < size]
    if not funcs:
        return App(rng.choice(sig.constants()))
    f = rng.choice(funcs)
    budget = size - 1
    args = []
    for i in range(f.arity):
        k = rng.randint(1, max(1, budget - (f.arity - i - 1)))
        budget -= k
        args.append(_random_sog(rng, sig, fvar, n, k))
    return App(f.name, tuple(args))


def _match(pattern: Term, t: Term, env: dict[int, Term]) -> bool:
    if isinstance(pattern, Var):
        if pattern.index in env:
            return env[pattern.index] == t
        env[pattern.index] = t
        return True
    if not isinstance(t, App) or pattern.sym != t.sym or len(pattern.args) != len(t.args):
        return False
    return all(_match(p, a, env) for p, a in zip(pattern.args, t.args))


def fold(rng: random.Random, t: Term, sigma: Binding, sig: Signature, p: float = 0.6) -> Term:
    """Replace instances of ``sigma.body`` in ground ``t`` by ``F(...)``, at random.

    The result ``v`` satisfies ``apply(v, sigma) == t``.
    """
    env: dict[int, Term] = {}
    if rng.random() < p and _match(sigma.body, t, env):
        args = []
        for i in range(1, sigma.arity + 1):
            # arguments the body ignores are fresh and left unfolded, which keeps
            # the recursion finite when the body is ground
            args.append(fold(rng, env[i], sigma, sig, p) if i in env else random_ground(rng, sig, 3))
        return FApp(sigma.fvar, tuple(args))
    if isinstance(t, App) and t.args:
        return App(t.sym, tuple(fold(rng, a, sigma, sig, p) for a in t.args))
    return t


def unifiable_problem(
    rng: random.Random,
    sig: Signature = SMALL,
    n: int = 1,
    body_size: int = 5,
    term_size: int = 7,
    equations: int = 1,
    fvar: str = "F",
) -> tuple[Problem, Binding]:
    """A problem together with a binding that unifies it by construction."""
    body = random_body(rng, sig, n, body_size)
    sigma = Binding(fvar, n, body)
    eqs = []
    while len(eqs) < equations:
        u = random_sog(rng, sig, fvar, n, term_size)
        v = fold(rng, apply(u, sigma), sigma, sig)
        if fvar not in fvars(v) or u == v:
            continue
        eqs.append(Equation(u, v) if rng.random() < 0.5 else Equation(v, u))
    return Problem(sig, fvar, n, tuple(eqs)), sigma


def unsatisfiable_problem(
    rng: random.Random, sig: Signature = SMALL, n: int = 1, term_size: int = 6, fvar: str = "F"
) -> Problem:
    """A problem without unifiers: a rigid clash or a term equated with a proper superterm."""
    a, b = sig.constants()[:2]
    x = random_sog(rng, sig, fvar, n, term_size)
    y = random_sog(rng, sig, fvar, n, term_size)
    kind = rng.randrange(3)
    if kind == 0:
        lhs, rhs = App("g", (App(a), x)), App("g", (App(b), y))
    elif kind == 1:
        lhs, rhs = x, App("g", (x, random_ground(rng, sig, 3) if rng.random() < 0.5 else y))
    else:
        lhs, rhs = App("g", (x, App(a))), App("g", (y, App(b)))
    if rng.random() < 0.5:
        lhs, rhs = rhs, lhs
    return Problem(sig, fvar, n, (Equation(lhs, rhs),))


def mixed_unifiable(rng: random.Random, count: int, fragment_only: bool = False) -> list[Problem]:
    """Unary problems over ``SMALL`` (70%) or ``UNARY`` with one or two equations."""
    from .decider import fragment_report

    out = []
    while len(out) < count:
        sig = SMALL if rng.random() < 0.7 else UNARY
        p, _ = unifiable_problem(
            rng, sig, 1, body_size=rng.randint(1, 7), term_size=rng.randint(3, 8),
            equations=rng.randint(1, 2),
        )
        if not fragment_only or fragment_report(p).in_fragment:
            out.append(p)
    return out


def unsatisfiable_fragment(rng: random.Random, count: int) -> list[Problem]:
    """Unary unsatisfiable problems that the decider does not abstain on."""
    from .decider import fragment_report

    out = []
    while len(out) < count:
        p = unsatisfiable_problem(rng, SMALL if rng.random() < 0.7 else UNARY, 1, rng.randint(3, 7))
        if fragment_report(p).in_fragment:
            out.append(p)
    return out
