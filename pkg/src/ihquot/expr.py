"""Class expression grammar.

::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)?
    atom   := NUMBER ["/" NUMBER] | GEN | "(" expr ")"
    GEN    := "x" | "b" | "a" INT

``b`` is the equivariant parameter, ``x`` the equivariant hyperplane class on
projective space, ``a1 .. aN`` the classes of the projective-line factors.
A slash is allowed only between two integer literals, as a rational
coefficient; there is no division of classes.

Parsing produces a raw polynomial: a dict from monomials (sorted tuples of
``(generator, exponent)``) to :class:`Fraction` coefficients.
"""

from __future__ import annotations

import re
from fractions import Fraction

Monomial = tuple[tuple[str, int], ...]
RawPoly = dict[Monomial, Fraction]


class ExprError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at column {position + 1})"
        super().__init__(message)


_TOKEN = re.compile(r"\s*(?:(\d+)|(x|b|a\d+)|(\*\*|[-+*^()/]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ExprError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2):
            gen = m.group(2)
            if gen.startswith("a") and int(gen[1:]) < 1:
                raise ExprError(f"generator index must be >= 1 in {gen!r}", start)
            tokens.append(("gen", gen, start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    exps = dict(m1)
    for g, e in m2:
        exps[g] = exps.get(g, 0) + e
    return tuple(sorted(exps.items()))


def poly_add(p: RawPoly, q: RawPoly, sign: int = 1) -> RawPoly:
    out = dict(p)
    for m, c in q.items():
        out[m] = out.get(m, 0) + sign * c
    return {m: c for m, c in out.items() if c != 0}


def poly_mul(p: RawPoly, q: RawPoly) -> RawPoly:
    out: RawPoly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = _mono_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c != 0}


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ExprError(f"expected {op!r}", pos)

    def parse(self) -> RawPoly:
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprError(f"unexpected token {val!r}", pos)
        return result

    def expr(self) -> RawPoly:
        acc = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = 1 if self.take()[1] == "+" else -1
            acc = poly_add(acc, self.term(), sign)
        return acc

    def term(self) -> RawPoly:
        acc = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            acc = poly_mul(acc, self.unary())
        return acc

    def unary(self) -> RawPoly:
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            return {m: -c for m, c in self.unary().items()}
        return self.power()

    def power(self) -> RawPoly:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                raise ExprError("exponent must be a nonnegative integer", pos)
            out: RawPoly = {(): Fraction(1)}
            for _ in range(val):
                out = poly_mul(out, base)
            return out
        return base

    def atom(self) -> RawPoly:
        kind, val, pos = self.take()
        if kind == "num":
            coeff = Fraction(val)
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                k2, v2, p2 = self.take()
                if k2 != "num":
                    raise ExprError("'/' is only allowed between integer literals", p2)
                if v2 == 0:
                    raise ExprError("zero denominator", p2)
                coeff = Fraction(val, v2)
            return {(): coeff} if coeff else {}
        if kind == "gen":
            return {((val, 1),): Fraction(1)}
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ExprError("expected a number, generator or '('", pos)


def parse_class(text: str) -> RawPoly:
    if not text.strip():
        raise ExprError("empty class expression")
    return _Parser(text).parse()


def generators(poly: RawPoly) -> set[str]:
    return {g for m in poly for g, _ in m}
