"""Line-oriented problem files and substitution syntax.

Problem file::

    # comment
    sig g/2 a/0 b/0
    fvar F/1
    eq F(g(a,a)) = g(F(a),F(a))
    term g(F(a),b)

``term`` lines carry standalone terms for the ``count`` command; they are not
part of the problem.  The function variable is whatever ``fvar`` declares.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field

from .terms import (
    App,
    Binding,
    Equation,
    FApp,
    Problem,
    Signature,
    Symbol,
    Term,
    TermError,
    Var,
    render,
    validate_problem,
)

NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
DECL = re.compile(r"([A-Za-z][A-Za-z0-9_]*)/(\d+)$")


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {msg}")
        self.line = line
        self.column = column


class ValidationError(ValueError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class _TermParser:
    """Recursive descent over one line; ``resolve(name, nargs, col)`` builds leaves."""

    def __init__(self, text: str, line: int, offset: int, resolve):
        self.text = text
        self.pos = 0
        self.line = line
        self.offset = offset
        self.resolve = resolve

    def error(self, msg, pos=None):
        p = self.pos if pos is None else pos
        raise ParseError(msg, self.line, self.offset + p + 1)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch):
        self.skip()
        if self.text[self.pos : self.pos + 1] != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def at(self, ch) -> bool:
        self.skip()
        return self.text[self.pos : self.pos + 1] == ch

    def term(self) -> Term:
        self.skip()
        m = NAME.match(self.text, self.pos)
        if not m:
            self.error("expected a name")
        start = self.pos
        self.pos = m.end()
        args = []
        if self.at("("):
            self.pos += 1
            args.append(self.term())
            while self.at(","):
                self.pos += 1
                args.append(self.term())
            self.expect(")")
        return self.resolve(m.group(0), tuple(args), start, self)

    def done(self):
        self.skip()
        if self.pos != len(self.text):
            self.error(f"unexpected {self.text[self.pos]!r}")


@dataclass
class ProblemFile:
    problem: Problem
    terms: tuple[Term, ...] = ()
    warnings: list[str] = field(default_factory=list)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_file(text: str, validate: bool = True) -> ProblemFile:
    lines = text.splitlines()
    symbols: list[Symbol] = []
    fvar, arity = "", 0
    body_lines = []
    for no, raw in enumerate(lines, start=1):
        line = _strip_comment(raw)
        stripped = line.strip()
        if not stripped:
            continue
        kw = stripped.split(None, 1)[0]
        col = line.index(kw) + 1
        if kw == "sig":
            rest = stripped[3:].split()
            if not rest:
                raise ParseError("empty sig declaration", no, col)
            for item in rest:
                m = DECL.match(item)
                if not m:
                    raise ParseError(f"bad symbol declaration {item!r}", no, line.index(item) + 1)
                symbols.append(Symbol(m.group(1), int(m.group(2))))
        elif kw == "fvar":
            rest = stripped[4:].split()
            m = DECL.match(rest[0]) if len(rest) == 1 else None
            if not m:
                raise ParseError("expected fvar NAME/ARITY", no, col)
            if fvar:
                raise ParseError("second fvar declaration", no, col)
            fvar, arity = m.group(1), int(m.group(2))
        elif kw in ("eq", "term"):
            body_lines.append((no, kw, line, line.index(kw) + len(kw)))
        else:
            raise ParseError(f"unknown declaration {kw!r}", no, col)

    def resolve(name, args, start, parser):
        if fvar and name == fvar:
            return FApp(name, args)
        return App(name, args)

    eqs, terms, notes = [], [], []
    seen = set()
    for no, kw, line, start in body_lines:
        p = _TermParser(line[start:], no, start, resolve)
        if kw == "term":
            t = p.term()
            p.done()
            terms.append(t)
            continue
        lhs = p.term()
        p.expect("=")
        rhs = p.term()
        p.done()
        e = Equation(lhs, rhs)
        if e in seen:
            msg = f"line {no}: duplicate equation dropped"
            notes.append(msg)
            warnings.warn(msg, stacklevel=2)
        seen.add(e)
        eqs.append(e)

    problem = Problem(Signature(tuple(symbols)), fvar, arity, tuple(eqs))
    if validate:
        violations = validate_problem(problem)
        if violations:
            raise ValidationError(violations)
    return ProblemFile(problem, tuple(terms), notes)


def parse_problem(text: str, validate: bool = True) -> Problem:
    return parse_file(text, validate).problem


def print_problem(problem: Problem, terms=(), header: str | None = None) -> str:
    out = []
    if header:
        out += [f"# {h}" for h in header.splitlines()]
    if problem.signature.symbols:
        out.append(f"sig {problem.signature}")
    if problem.fvar:
        out.append(f"fvar {problem.fvar}/{problem.arity}")
    out += [f"eq {e}" for e in problem.equations]
    out += [f"term {render(t)}" for t in terms]
    return "\n".join(out) + "\n"


def parse_term(text: str, signature: Signature | None = None, fvar: str | None = None) -> Term:
    """Parse a single term; names equal to ``fvar`` become function-variable applications."""

    def resolve(name, args, start, parser):
        if fvar and name == fvar:
            return FApp(name, args)
        if signature is not None and name not in signature:
            parser.error(f"unknown symbol {name}", start)
        return App(name, args)

    p = _TermParser(text, 1, 0, resolve)
    t = p.term()
    p.done()
    return t


SUB = re.compile(r"\s*sub\s+([A-Za-z][A-Za-z0-9_]*)\s*\(([^)]*)\)\s*=")


def parse_subst(text: str, signature: Signature, fvar: str | None = None) -> Binding:
    """Parse ``sub F(x1,...,xn) = body`` against ``signature``."""
    m = SUB.match(text)
    if not m:
        raise ParseError("expected 'sub NAME(PARAMS) = TERM'", 1, 1)
    name = m.group(1)
    if fvar is not None and name != fvar:
        raise ParseError(f"substitution binds {name}, expected {fvar}", 1, m.start(1) + 1)
    params = [p.strip() for p in m.group(2).split(",")] if m.group(2).strip() else []
    if not params or any(not NAME.fullmatch(p) for p in params):
        raise ParseError("bad parameter list", 1, m.start(2) + 1)
    if len(set(params)) != len(params):
        raise ParseError("repeated parameter", 1, m.start(2) + 1)
    for p in params:
        if p in signature:
            raise ParseError(f"parameter {p} shadows a signature symbol", 1, m.start(2) + 1)

    def resolve(sym, args, start, parser):
        if sym in params:
            if args:
                parser.error(f"bound variable {sym} applied to arguments", start)
            return Var(params.index(sym) + 1)
        if sym not in signature:
            parser.error(f"unknown symbol or variable {sym}", start)
        if signature.arity(sym) != len(args):
            parser.error(f"{sym} expects {signature.arity(sym)} arguments", start)
        return App(sym, args)

    p = _TermParser(text[m.end() :], 1, m.end(), resolve)
    body = p.term()
    p.done()
    try:
        return Binding(name, len(params), body)
    except TermError as exc:
        raise ParseError(str(exc)) from None
