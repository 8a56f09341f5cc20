"""Lexer and recursive-descent parser for operator expressions.

Grammar (whitespace insensitive, ``*`` is the noncommutative product)::

    expr    := ['-'] term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := primary ['^' ['-'] uint]
    primary := uint ['/' uint] | decimal | atom | '(' expr ')'
             | 'comm' '(' expr ',' expr ')'

Atoms are the operators ``a ad sp sm sz``, the scalars ``omega omega0 g i``,
the abbreviations ``alpha alphabar`` and the named operators
``N Nbar A Abar H Hbar HR``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

OPERATOR_ATOMS = ("a", "ad", "sp", "sm", "sz")
SCALAR_ATOMS = ("omega", "omega0", "g", "i", "alpha", "alphabar")
NAMED_ATOMS = ("N", "Nbar", "A", "Abar", "H", "Hbar", "HR")
ATOMS = OPERATOR_ATOMS + SCALAR_ATOMS + NAMED_ATOMS


class ParseError(ValueError):
    def __init__(self, message: str, position: int, expected: frozenset[str]):
        super().__init__(f"{message} at position {position}; expected one of {sorted(expected)}")
        self.position = position
        self.expected = expected


# -- tree ---------------------------------------------------------------------

class Expr:
    def __add__(self, other):
        return Add(((1, self), (1, _lift(other))))

    def __radd__(self, other):
        return Add(((1, _lift(other)), (1, self)))

    def __sub__(self, other):
        return Add(((1, self), (-1, _lift(other))))

    def __rsub__(self, other):
        return Add(((1, _lift(other)), (-1, self)))

    def __mul__(self, other):
        return Mul((self, _lift(other)))

    def __rmul__(self, other):
        return Mul((_lift(other), self))

    def __neg__(self):
        return Neg(self)

    def __pow__(self, k: int):
        return Pow(self, k)


def _lift(x) -> Expr:
    if isinstance(x, Expr):
        return x
    return Num(Fraction(x))


@dataclass(frozen=True)
class Num(Expr):
    value: Fraction


@dataclass(frozen=True)
class Atom(Expr):
    name: str


@dataclass(frozen=True)
class Add(Expr):
    terms: tuple  # of (sign, Expr)


@dataclass(frozen=True)
class Mul(Expr):
    factors: tuple


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exp: int


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True)
class Comm(Expr):
    left: Expr
    right: Expr


def comm(x: Expr, y: Expr) -> Comm:
    return Comm(x, y)


# -- lexer --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^(),/]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, frozenset({"token"}))
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# -- parser -------------------------------------------------------------------

_PRIMARY_START = frozenset({"number", "atom", "(", "comm("})


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

    def expect_op(self, op: str) -> Token:
        if self.tok.kind == "op" and self.tok.text == op:
            return self.advance()
        raise ParseError(f"unexpected {self._describe()}", self.tok.pos, frozenset({op}))

    def _describe(self) -> str:
        return "end of input" if self.tok.kind == "end" else repr(self.tok.text)

    def at_op(self, *ops: str) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self._describe()}", self.tok.pos,
                             frozenset({"+", "-", "*", "end of input"}))
        return e

    def expr(self) -> Expr:
        sign = 1
        if self.at_op("-"):
            self.advance()
            sign = -1
        terms = [(sign, self.term())]
        while self.at_op("+", "-"):
            sign = 1 if self.advance().text == "+" else -1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Add(tuple(terms))

    def term(self) -> Expr:
        factors = [self.factor()]
        while self.at_op("*"):
            self.advance()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def factor(self) -> Expr:
        base = self.primary()
        if self.at_op("^"):
            self.advance()
            sign = 1
            if self.at_op("-"):
                self.advance()
                sign = -1
            if self.tok.kind != "num" or not self.tok.text.isdigit():
                raise ParseError(f"unexpected {self._describe()}", self.tok.pos, frozenset({"uint"}))
            base = Pow(base, sign * int(self.advance().text))
        return base

    def primary(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            self.advance()
            value = Fraction(t.text)
            if self.at_op("/"):
                self.advance()
                if self.tok.kind != "num" or not self.tok.text.isdigit():
                    raise ParseError(f"unexpected {self._describe()}", self.tok.pos, frozenset({"uint"}))
                den = int(self.advance().text)
                if den == 0:
                    raise ParseError("zero denominator", self.tokens[self.i - 1].pos, frozenset({"uint"}))
                value = value / den
            return Num(value)
        if t.kind == "ident":
            if t.text == "comm":
                self.advance()
                self.expect_op("(")
                left = self.expr()
                self.expect_op(",")
                right = self.expr()
                self.expect_op(")")
                return Comm(left, right)
            if t.text not in ATOMS:
                raise ParseError(f"unknown atom {t.text!r}", t.pos, _PRIMARY_START)
            self.advance()
            return Atom(t.text)
        if self.at_op("("):
            self.advance()
            e = self.expr()
            self.expect_op(")")
            return e
        raise ParseError(f"unexpected {self._describe()}", t.pos, _PRIMARY_START)


def parse(text: str) -> Expr:
    return _Parser(text).parse()
