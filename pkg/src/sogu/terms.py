"""Ranked-signature terms with a single second-order variable.

Terms are immutable trees built from three node kinds:

* ``App``   -- a signature symbol applied to arguments (constants have none),
* ``FApp``  -- the function variable applied to exactly ``n`` arguments,
* ``Var``   -- a bound variable, numbered from 1, legal only inside a
  ``Binding`` body.

Positions are tuples of positive integers; the empty tuple is the root.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Union


class TermError(ValueError):
    """Raised for ill-formed terms, positions or substitutions."""


@dataclass(frozen=True, slots=True)
class Symbol:
    name: str
    arity: int

    def __str__(self) -> str:
        return f"{self.name}/{self.arity}"


@dataclass(frozen=True, slots=True)
class Signature:
    symbols: tuple[Symbol, ...]

    @classmethod
    def of(cls, **arities: int) -> "Signature":
        """``Signature.of(g=2, a=0, b=0)``"""
        return cls(tuple(Symbol(k, v) for k, v in arities.items()))

    def __contains__(self, name: str) -> bool:
        return any(s.name == name for s in self.symbols)

    def arity(self, name: str) -> int:
        for s in self.symbols:
            if s.name == name:
                return s.arity
        raise KeyError(name)

    def names(self) -> list[str]:
        return [s.name for s in self.symbols]

    def base_symbols(self) -> list[str]:
        """Symbols of arity <= 1, in declaration order."""
        return [s.name for s in self.symbols if s.arity <= 1]

    def constants(self) -> list[str]:
        return [s.name for s in self.symbols if s.arity == 0]

    def __str__(self) -> str:
        return " ".join(map(str, self.symbols))


@dataclass(frozen=True, slots=True)
class App:
    sym: str
    args: tuple["Term", ...] = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, slots=True)
class FApp:
    fvar: str
    args: tuple["Term", ...]

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, slots=True)
class Var:
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise TermError(f"bound variable index must be >= 1, got {self.index}")

    def __str__(self) -> str:
        return f"x{self.index}"


Term = Union[App, FApp, Var]
Position = tuple[int, ...]
Head = Union[str, Var]


def const(name: str) -> App:
    return App(name)


def var_names(n: int) -> list[str]:
    """Concrete names of bound variables: ``x`` for unary binders, else ``x1..xn``."""
    return ["x"] if n == 1 else [f"x{i}" for i in range(1, n + 1)]


def render(t: Term, names: list[str] | None = None) -> str:
    """Canonical concrete syntax, no whitespace."""
    if isinstance(t, Var):
        if names is not None and t.index <= len(names):
            return names[t.index - 1]
        return f"x{t.index}"
    name = t.sym if isinstance(t, App) else t.fvar
    if not t.args:
        return name
    return name + "(" + ",".join(render(a, names) for a in t.args) + ")"


def head(t: Term) -> Head:
    if isinstance(t, App):
        return t.sym
    if isinstance(t, FApp):
        return t.fvar
    return t


def children(t: Term) -> tuple[Term, ...]:
    return () if isinstance(t, Var) else t.args


def size(t: Term) -> int:
    return 1 + sum(size(a) for a in children(t))


def depth(t: Term) -> int:
    """Constants (and bound variables) have depth 1."""
    args = children(t)
    return 1 + (max(depth(a) for a in args) if args else 0)


def iter_positions(t: Term, prefix: Position = ()) -> Iterator[tuple[Position, Term]]:
    """Pre-order walk yielding ``(position, subterm)``."""
    yield prefix, t
    for i, a in enumerate(children(t), start=1):
        yield from iter_positions(a, prefix + (i,))


def positions(t: Term) -> set[Position]:
    return {p for p, _ in iter_positions(t)}


def subterm_at(t: Term, p: Position) -> Term:
    for i in p:
        args = children(t)
        if not 1 <= i <= len(args):
            raise TermError(f"invalid position {format_position(p)}")
        t = args[i - 1]
    return t


def format_position(p: Position) -> str:
    return ".".join(map(str, p)) if p else "ε"


def occ_term(s: Term, t: Term) -> int:
    """Number of positions of ``t`` holding a subterm equal to ``s``."""
    return sum(1 for _, u in iter_positions(t) if u == s)


def occ_sym(h: Head, t: Term) -> int:
    """Number of positions of ``t`` whose head is ``h``.

    ``h`` is a symbol or function-variable name, or a ``Var``.
    """
    return sum(1 for _, u in iter_positions(t) if head(u) == h)


def fvars(t: Term) -> set[str]:
    return {u.fvar for _, u in iter_positions(t) if isinstance(u, FApp)}


def is_ground(t: Term) -> bool:
    return all(isinstance(u, App) for _, u in iter_positions(t))


@dataclass(frozen=True, slots=True)
class Binding:
    """``fvar ↦ λx1..xn. body`` with a first-order body."""

    fvar: str
    arity: int
    body: Term

    def __post_init__(self):
        for _, u in iter_positions(self.body):
            if isinstance(u, FApp):
                raise TermError("binding body must be first-order")
            if isinstance(u, Var) and u.index > self.arity:
                raise TermError(f"bound variable x{u.index} out of range 1..{self.arity}")

    def holes(self) -> tuple[int, ...]:
        """Occurrence count of each bound variable in the body."""
        return tuple(occ_sym(Var(i), self.body) for i in range(1, self.arity + 1))

    def __str__(self) -> str:
        names = var_names(self.arity)
        return f"sub {self.fvar}({','.join(names)}) = {render(self.body, names)}"


def apply(t: Term, sigma: Binding) -> Term:
    """Apply ``sigma`` bottom-up; arguments are instantiated before substitution."""
    if isinstance(t, Var):
        return t
    args = tuple(apply(a, sigma) for a in t.args)
    if isinstance(t, App):
        return App(t.sym, args)
    if t.fvar != sigma.fvar:
        raise TermError(f"no binding for function variable {t.fvar}")
    if len(args) != sigma.arity:
        raise TermError(
            f"{t.fvar} applied to {len(args)} arguments, binding has arity {sigma.arity}"
        )
    return _instantiate(sigma.body, args)


def _instantiate(body: Term, args: tuple[Term, ...]) -> Term:
    if isinstance(body, Var):
        return args[body.index - 1]
    if not body.args:
        return body
    return App(body.sym, tuple(_instantiate(a, args) for a in body.args))


@dataclass(frozen=True, slots=True)
class Equation:
    lhs: Term
    rhs: Term

    def __str__(self) -> str:
        return f"{render(self.lhs)} = {render(self.rhs)}"


@dataclass(frozen=True)
class Problem:
    """A set of equations over one function variable of fixed arity.

    Structurally equal equations are collapsed on construction; first
    occurrence order is kept so printing stays deterministic.
    """

    signature: Signature
    fvar: str
    arity: int
    equations: tuple[Equation, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "equations", tuple(dict.fromkeys(self.equations)))
        # problems key several caches; hashing deep terms once is enough
        object.__setattr__(
            self, "_hash", hash((self.signature, self.fvar, self.arity, self.equations))
        )

    def __hash__(self) -> int:
        return self._hash

    def binding(self, body: Term) -> Binding:
        return Binding(self.fvar, self.arity, body)

    @cached_property
    def parts(self) -> tuple["Problem", ...]:
        """One single-equation problem per equation."""
        return tuple(Problem(self.signature, self.fvar, self.arity, (e,)) for e in self.equations)


def is_unifier(problem: Problem, sigma: Binding) -> bool:
    if sigma.fvar != problem.fvar or sigma.arity != problem.arity:
        return False
    return unifies_body(problem, sigma.body)


def unifies_body(problem: Problem, body: Term) -> bool:
    """``apply(u) == apply(v)`` for every equation, without building the instances.

    Both sides are unfolded lazily and compared top-down, so mismatches are
    found after visiting only a prefix of the instantiated terms.
    """
    return all(_same(e.lhs, None, e.rhs, None, body) for e in problem.equations)


def _unfold(t, env, body):
    while True:
        if isinstance(t, App):
            return t, env
        if isinstance(t, Var):
            t, env = env[t.index - 1]
        else:
            env = tuple((a, env) for a in t.args)
            t = body


def _same(s, senv, t, tenv, body) -> bool:
    if s is t and senv is tenv:
        return True
    s, senv = _unfold(s, senv, body)
    t, tenv = _unfold(t, tenv, body)
    if s.sym != t.sym or len(s.args) != len(t.args):
        return False
    return all(_same(a, senv, b, tenv, body) for a, b in zip(s.args, t.args))


def _term_violations(t: Term, problem: Problem, where: str) -> list[str]:
    out = []
    sig = problem.signature
    for p, u in iter_positions(t):
        at = f"{where} at {format_position(p)}"
        if isinstance(u, Var):
            out.append(f"{at}: variable {u} not allowed in an equation")
        elif isinstance(u, FApp):
            if u.fvar != problem.fvar:
                out.append(f"{at}: unknown function variable {u.fvar}")
            elif len(u.args) != problem.arity:
                out.append(
                    f"{at}: arity: {u.fvar} expects {problem.arity} arguments, got {len(u.args)}"
                )
        elif u.sym not in sig:
            out.append(f"{at}: unknown symbol {u.sym}")
        elif sig.arity(u.sym) != len(u.args):
            out.append(
                f"{at}: arity: {u.sym} expects {sig.arity(u.sym)} arguments, got {len(u.args)}"
            )
    return out


def validate_problem(problem: Problem) -> list[str]:
    """Return the list of well-formedness violations (empty when valid)."""
    out = []
    sig = problem.signature
    names = sig.names()
    if len(set(names)) != len(names):
        out.append("signature: duplicate symbol names")
    if any(not n for n in names):
        out.append("signature: empty symbol name")
    if not any(s.arity >= 1 for s in sig.symbols):
        out.append("signature: needs a symbol of arity >= 1")
    if not any(s.arity == 0 for s in sig.symbols):
        out.append("signature: needs a constant")
    if not problem.fvar:
        out.append("missing function variable declaration")
    elif problem.fvar in sig:
        out.append(f"function variable {problem.fvar} clashes with a signature symbol")
    if problem.arity < 1:
        out.append("function variable arity must be >= 1")
    for k, e in enumerate(problem.equations, start=1):
        out += _term_violations(e.lhs, problem, f"eq {k} lhs")
        out += _term_violations(e.rhs, problem, f"eq {k} rhs")
        if problem.fvar not in fvars(e.lhs) or problem.fvar not in fvars(e.rhs):
            out.append(f"eq {k}: {problem.fvar or 'F'} must occur on both sides")
    return out
