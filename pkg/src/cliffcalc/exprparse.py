"""Tokenizer, AST and precedence-climbing parser for calculator expressions.

Operator precedence, tightest first:

    unary minus
    **                integer power
    *                 geometric product
    ^                 wedge product
    _|  |_            left / right contraction (same level)
    +  -              addition, subtraction

All binary operators associate left.  Contractions deliberately bind loosest
among the products, so ``e(2) _| e(1) * e(2)`` reads as ``e(2) _| (e(1)*e(2))``;
getting the surprising grouping requires explicit parentheses.

Blade literals: ``e_12`` (a run of single-digit indices), ``e[1,10,12]``
(bracketed full indices), or the ``e(7)`` builtin call.  The exponent of
``**`` must be a non-negative integer literal.

A number directly followed by a blade literal multiplies it (``2e_1``,
``4e[1,10]``), and a leading ``+`` is a no-op, so rendered one-line output
like ``+ 1 + 2e_1 + 3e_2`` reads back as an expression.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Union

from .blade import Blade, MAX_INDEX


class ExpressionSyntaxError(ValueError):
    """Syntax error with a 0-based ``position`` and the ``expected`` tokens."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        detail = f"{message} (at position {position + 1}"
        if expected:
            detail += f"; expected {', '.join(expected)}"
        detail += ")"
        super().__init__(detail)
        self.base_message = message
        self.position = position
        self.expected = expected


class Token(NamedTuple):
    kind: str  # number | ident | blade | op | end
    value: object
    pos: int
    text: str = ""


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class BladeLit:
    indices: Blade


@dataclass(frozen=True)
class Var:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["Expr", ...]
    pos: int = 0


Expr = Union[Num, BladeLit, Var, Neg, BinOp, Pow, Call]

PRECEDENCE = {"+": 10, "-": 10, "_|": 20, "|_": 20, "^": 30, "*": 40, "**": 50}

_TWO_CHAR_OPS = ("**", "_|", "|_")
_ONE_CHAR_OPS = "+-*^()[],"
_NUMBER_RE = re.compile(r"\d+(?:\.\d*)?|\.\d+")
_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        two = source[i:i + 2]
        if two in _TWO_CHAR_OPS:
            tokens.append(Token("op", two, i))
            i += 2
            continue
        if ch.isdigit() or ch == ".":
            m = _NUMBER_RE.match(source, i)
            if not m:
                raise ExpressionSyntaxError("malformed number", i)
            tokens.append(Token("number", float(m.group()), i, m.group()))
            i = m.end()
            continue
        if ch == "e" and source[i + 1:i + 2] == "_" and source[i + 2:i + 3].isdigit():
            j = i + 2
            while j < n and source[j].isdigit():
                j += 1
            indices = []
            for k, digit in enumerate(source[i + 2:j]):
                index = int(digit)
                if index == 0:
                    raise ExpressionSyntaxError("blade index must be >= 1", i + 2 + k)
                if indices and index <= indices[-1]:
                    raise ExpressionSyntaxError(
                        "blade indices must be strictly increasing", i + 2 + k
                    )
                indices.append(index)
            tokens.append(Token("blade", tuple(indices), i, source[i:j]))
            i = j
            continue
        if ch.isalpha():
            m = _IDENT_RE.match(source, i)
            name = m.group()
            end = m.end()
            # give back a trailing '_' so "x_|y" lexes as x _| y
            if name.endswith("_") and source[end:end + 1] == "|":
                name = name[:-1]
                end -= 1
            tokens.append(Token("ident", name, i))
            i = end
            continue
        if ch in _ONE_CHAR_OPS:
            tokens.append(Token("op", ch, i))
            i += 1
            continue
        raise ExpressionSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(Token("end", None, n))
    return tokens


_ATOM_EXPECTED = ("a number", "a blade literal", "a name", "'('", "'-'")


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.idx = 0

    def peek(self) -> Token:
        return self.tokens[self.idx]

    def advance(self) -> Token:
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect_op(self, value: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.value != value:
            raise ExpressionSyntaxError(
                f"unexpected {_describe(tok)}", tok.pos, (f"'{value}'",)
            )
        return self.advance()

    def expression(self, min_prec: int = 0) -> Expr:
        left = self.unary()
        while True:
            tok = self.peek()
            if tok.kind != "op" or tok.value not in PRECEDENCE:
                return left
            prec = PRECEDENCE[tok.value]
            if prec < min_prec:
                return left
            self.advance()
            if tok.value == "**":
                left = Pow(left, self.power_exponent())
            else:
                right = self.expression(prec + 1)
                left = BinOp(tok.value, left, right)

    def power_exponent(self) -> int:
        tok = self.peek()
        if tok.kind != "number" or not tok.text.isdigit():
            raise ExpressionSyntaxError(
                "power exponent must be a non-negative integer literal",
                tok.pos,
                ("an integer",),
            )
        self.advance()
        return int(tok.text)

    def unary(self) -> Expr:
        tok = self.peek()
        if tok.kind == "op" and tok.value == "-":
            self.advance()
            return Neg(self.unary())
        if tok.kind == "op" and tok.value == "+":
            self.advance()
            return self.unary()
        return self.atom()

    def atom(self) -> Expr:
        tok = self.advance()
        if tok.kind == "number":
            num = Num(tok.value)
            # juxtaposed coefficient, as in rendered output: 2e_1, 4e[1,10]
            nxt = self.peek()
            if nxt.kind == "blade":
                self.advance()
                return BinOp("*", num, BladeLit(nxt.value))
            if (
                nxt.kind == "ident"
                and nxt.value == "e"
                and self.tokens[self.idx + 1].kind == "op"
                and self.tokens[self.idx + 1].value == "["
            ):
                self.advance()
                return BinOp("*", num, self.bracket_blade())
            return num
        if tok.kind == "blade":
            return BladeLit(tok.value)
        if tok.kind == "ident":
            nxt = self.peek()
            if nxt.kind == "op" and nxt.value == "(":
                return self.call(tok)
            if nxt.kind == "op" and nxt.value == "[" and tok.value == "e":
                return self.bracket_blade()
            return Var(tok.value, tok.pos)
        if tok.kind == "op" and tok.value == "(":
            inner = self.expression(0)
            self.expect_op(")")
            return inner
        raise ExpressionSyntaxError(
            f"unexpected {_describe(tok)}", tok.pos, _ATOM_EXPECTED
        )

    def call(self, name_tok: Token) -> Call:
        self.advance()  # '('
        args: list[Expr] = []
        if not (self.peek().kind == "op" and self.peek().value == ")"):
            args.append(self.expression(0))
            while self.peek().kind == "op" and self.peek().value == ",":
                self.advance()
                args.append(self.expression(0))
        self.expect_op(")")
        return Call(name_tok.value, tuple(args), name_tok.pos)

    def bracket_blade(self) -> BladeLit:
        self.advance()  # '['
        indices: list[int] = []
        while True:
            tok = self.peek()
            if tok.kind != "number" or not tok.text.isdigit():
                raise ExpressionSyntaxError(
                    f"unexpected {_describe(tok)}", tok.pos, ("an integer index",)
                )
            index = int(tok.text)
            if index < 1 or index > MAX_INDEX:
                raise ExpressionSyntaxError(
                    f"blade index must be in 1..{MAX_INDEX}", tok.pos
                )
            if indices and index <= indices[-1]:
                raise ExpressionSyntaxError(
                    "blade indices must be strictly increasing", tok.pos
                )
            indices.append(index)
            self.advance()
            tok = self.peek()
            if tok.kind == "op" and tok.value == ",":
                self.advance()
                continue
            if tok.kind == "op" and tok.value == "]":
                self.advance()
                return BladeLit(tuple(indices))
            raise ExpressionSyntaxError(
                f"unexpected {_describe(tok)}", tok.pos, ("','", "']'")
            )


def _describe(tok: Token) -> str:
    if tok.kind == "end":
        return "end of input"
    if tok.kind == "op":
        return f"'{tok.value}'"
    if tok.kind == "number":
        return f"number {tok.text}"
    if tok.kind == "blade":
        return f"blade {tok.text}"
    return f"name '{tok.value}'"


def parse_expr(source: str) -> Expr:
    """Parse one calculator expression into an AST."""
    parser = _Parser(tokenize(source))
    expr = parser.expression(0)
    tail = parser.peek()
    if tail.kind != "end":
        raise ExpressionSyntaxError(
            f"unexpected {_describe(tail)}", tail.pos, ("an operator", "end of input")
        )
    return expr
