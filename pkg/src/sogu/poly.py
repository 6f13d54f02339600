"""Multivariate polynomials with Python-int coefficients.

A polynomial in ``nvars`` variables is a mapping from exponent tuples to
nonzero integer coefficients.  Monomials are ordered graded-lexicographically
(highest first) for printing.

Text grammar::

    poly  := ["-"] term (("+" | "-") term)*  |  "0"
    term  := coeff ("*" power)*  |  power ("*" power)*
    power := var ["^" nat]
    var   := "x" nat            (1-based)
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

Exponents = tuple[int, ...]


class PolyParseError(ValueError):
    def __init__(self, msg: str, column: int):
        super().__init__(f"column {column}: {msg}")
        self.column = column


def _order_key(e: Exponents):
    return (sum(e), e)


class IntPoly:
    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponents, int] = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent vector {e} has length != {nvars}")
            if any(k < 0 for k in e):
                raise ValueError(f"negative exponent in {e}")
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in acc.items() if c != 0}

    @classmethod
    def zero(cls, nvars: int) -> "IntPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: int) -> "IntPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "IntPoly":
        """The variable ``x_i`` (1-based)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, coeff: int, exps: Sequence[int]) -> "IntPoly":
        return cls(len(exps), {tuple(exps): coeff})

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def monomials(self) -> list[tuple[int, Exponents]]:
        """(coeff, exponents) pairs, leading monomial first."""
        return [(self._terms[e], e) for e in sorted(self._terms, key=_order_key, reverse=True)]

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def constant_term(self) -> int:
        return self._terms.get((0,) * self.nvars, 0)

    def coefficients(self) -> list[int]:
        """Dense coefficient list, lowest degree first (univariate only)."""
        if self.nvars != 1:
            raise ValueError("coefficients() needs a univariate polynomial")
        out = [0] * (self.degree() + 1)
        for (k,), c in self._terms.items():
            out[k] = c
        return out

    def _check(self, other: "IntPoly"):
        if self.nvars != other.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly.constant(self.nvars, other)
        if isinstance(other, IntPoly):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(self.nvars, list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = []
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                prod.append((tuple(a + b for a, b in zip(e1, e2)), c1 * c2))
        return IntPoly(self.nvars, prod)

    __rmul__ = __mul__

    def scale(self, k: int) -> "IntPoly":
        return IntPoly(self.nvars, {e: k * c for e, c in self._terms.items()})

    def __call__(self, *point: int) -> int:
        return self.eval(point)

    def eval(self, point: Sequence[int]) -> int:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(point)}")
        total = 0
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x**k
            total += v
        return total

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(self.nvars, other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self):
        return f"IntPoly({self.nvars}, {print_poly(self)!r})"

    def __str__(self):
        return print_poly(self)

    def to_json(self) -> list:
        """``[[coeff, [e1, ..., en]], ...]`` in canonical order."""
        return [[c, list(e)] for c, e in self.monomials()]


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return p - q


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def scale(k: int, p: IntPoly) -> IntPoly:
    return p.scale(k)


def print_poly(p: IntPoly, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, (c, e) in enumerate(p.monomials()):
        powers = [
            f"{var}{j}" + (f"^{k}" if k > 1 else "") for j, k in enumerate(e, start=1) if k
        ]
        mag = abs(c)
        body = "*".join(([str(mag)] if mag != 1 or not powers else []) + powers)
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|([-+*^]))")


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise PolyParseError(f"unexpected character {text[col - 1]!r}", col)
        col = m.start() + len(m.group(0)) - len(m.group(0).lstrip()) + 1
        if m.group(1) is not None:
            out.append(("num", int(m.group(1)), col))
        elif m.group(2) is not None:
            out.append(("var", int(m.group(2)), col))
        else:
            out.append((m.group(3), None, col))
        pos = m.end()
    out.append(("end", None, len(text) + 1))
    return out


def parse_poly(text: str, nvars: int | None = None) -> IntPoly:
    """Parse the polynomial grammar; ``nvars`` defaults to the highest index used."""
    toks = _tokens(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind):
        nonlocal i
        tok = toks[i]
        if tok[0] != kind:
            raise PolyParseError(f"expected {kind}, got {tok[0]}", tok[2])
        i += 1
        return tok

    def power():
        _, idx, col = take("var")
        if idx < 1:
            raise PolyParseError("variable indices start at 1", col)
        k = 1
        if peek()[0] == "^":
            take("^")
            k = take("num")[1]
        return idx, k

    def term():
        coeff = 1
        pw: list[tuple[int, int]] = []
        if peek()[0] == "num":
            coeff = take("num")[1]
        else:
            pw.append(power())
        while peek()[0] == "*":
            take("*")
            pw.append(power())
        return coeff, pw

    raw = []
    sign = 1
    if peek()[0] == "-":
        take("-")
        sign = -1
    while True:
        c, pw = term()
        raw.append((sign * c, pw))
        if peek()[0] in ("+", "-"):
            sign = 1 if take(peek()[0])[0] == "+" else -1
            continue
        take("end")
        break

    used = max((idx for _, pw in raw for idx, _ in pw), default=0)
    if nvars is None:
        nvars = max(used, 1)
    elif used > nvars:
        raise PolyParseError(f"variable x{used} exceeds nvars={nvars}", 1)
    acc = []
    for c, pw in raw:
        e = [0] * nvars
        for idx, k in pw:
            e[idx - 1] += k
        acc.append((tuple(e), c))
    return IntPoly(nvars, acc)
