"""Parser for intersection products such as ``(2H+R)*H*H``.

Grammar::

    expr    := product
    product := factor ("*" factor)*
    factor  := "(" linear ")" | atom
    linear  := ["-"] term (("+" | "-") term)*
    term    := [integer] ("H" | "R") | integer

Every factor must be a linear form in H and R; constants are rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .chow import intersect
from .errors import DomainError
from .scroll import ResolvedClass, ScrollType

_TOKEN = re.compile(r"(\d+)|([HR])|([-+*()−])")


class ExpressionError(DomainError):
    def __init__(self, pos: int, message: str):
        super().__init__("divisor_expression", f"at position {pos}: {message}")
        self.pos = pos


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "sym", "op", "end"
    text: str
    pos: int


@dataclass(frozen=True)
class Term:
    coef: int
    symbol: str | None
    pos: int


@dataclass(frozen=True)
class Linear:
    terms: tuple[Term, ...]
    pos: int

    def to_class(self) -> ResolvedClass:
        h = sum(t.coef for t in self.terms if t.symbol == "H")
        rr = sum(t.coef for t in self.terms if t.symbol == "R")
        return ResolvedClass(h, rr)


@dataclass(frozen=True)
class Product:
    factors: tuple[Linear, ...]


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(pos, f"unexpected character {text[pos]!r}")
        num, sym, op = m.groups()
        if num is not None:
            tokens.append(Token("int", num, pos))
        elif sym is not None:
            tokens.append(Token("sym", sym, pos))
        else:
            tokens.append(Token("op", "-" if op == "−" else op, pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str):
        if self.tok.text != text or self.tok.kind != "op":
            raise ExpressionError(self.tok.pos, f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        self.advance()

    def product(self) -> Product:
        factors = [self.factor()]
        while self.tok.kind == "op" and self.tok.text == "*":
            self.advance()
            factors.append(self.factor())
        if self.tok.kind != "end":
            raise ExpressionError(self.tok.pos, f"unexpected {self.tok.text!r}")
        return Product(tuple(factors))

    def factor(self) -> Linear:
        start = self.tok.pos
        if self.tok.kind == "op" and self.tok.text == "(":
            self.advance()
            lin = self.linear(start)
            self.expect(")")
        else:
            lin = Linear((self.term(1),), start)
        if any(t.symbol is None and t.coef != 0 for t in lin.terms):
            raise ExpressionError(start, "factor has a constant part; each factor must be linear in H and R")
        if all(t.symbol is None for t in lin.terms):
            raise ExpressionError(start, "factor has degree 0; each factor must be linear in H and R")
        return lin

    def linear(self, start: int) -> Linear:
        sign = 1
        if self.tok.kind == "op" and self.tok.text in "+-":
            sign = -1 if self.advance().text == "-" else 1
        terms = [self.term(sign)]
        while self.tok.kind == "op" and self.tok.text in "+-":
            sign = -1 if self.advance().text == "-" else 1
            terms.append(self.term(sign))
        return Linear(tuple(terms), start)

    def term(self, sign: int) -> Term:
        pos = self.tok.pos
        coef = None
        if self.tok.kind == "int":
            coef = int(self.advance().text)
        if self.tok.kind == "sym":
            return Term(sign * (1 if coef is None else coef), self.advance().text, pos)
        if coef is None:
            found = self.tok.text or "end of input"
            raise ExpressionError(pos, f"expected integer, H or R, found {found!r}")
        return Term(sign * coef, None, pos)


def parse(text: str) -> Product:
    return _Parser(text).product()


def evaluate(scroll: ScrollType, text: str) -> int:
    """Parse ``text`` and intersect its factors on ``scroll``."""
    prod = parse(text)
    if len(prod.factors) != scroll.r:
        raise ExpressionError(
            prod.factors[-1].pos,
            f"product has {len(prod.factors)} factors but {scroll} has dimension {scroll.r}",
        )
    return intersect(scroll, [f.to_class() for f in prod.factors])
