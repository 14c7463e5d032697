"""Expression parser for the command-line front end.

Grammar (whitespace-insensitive):

    expr    := ['-'] term (('+' | '-') term)*
    term    := factor (['*'] factor)*
    factor  := atom "'"*
    atom    := scalar | generator | unit | mixture | '(' expr ')'
    scalar  := integer ['/' integer] | 'r2'
    generator := 's' digits | 'a' digits      (s12 means s_1 s_2)
    unit    := 'E[' word ',' word ']'
    mixture := 'b[' fraction ']'

Juxtaposition multiplies; a postfix apostrophe takes the adjoint.
Expressions over s/E live in O_n, expressions over a/b in the fermion
algebra; mixing the two promotes the fermion part to its image in O_2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .scalars import ONE, SQRT2, Scalar
from .words import parse_word
from .algebra import CuntzPoly
from .fermions import CarExpr, mixture, psi_map

Value = Union[Scalar, CuntzPoly, CarExpr]


class ExprError(ValueError):
    """Syntax or type error, carrying the source position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _promote(left: Value, right: Value,
             n: int) -> Tuple[Value, Value]:
    """Bring two operands to a common algebra for + / *."""
    def lift(v: Value, like: Value) -> Value:
        if isinstance(v, Scalar):
            if isinstance(like, CuntzPoly):
                return CuntzPoly.from_scalar(like.n, v)
            if isinstance(like, CarExpr):
                return CarExpr.from_scalar(v)
        return v
    if isinstance(left, CarExpr) and isinstance(right, CuntzPoly):
        left = psi_map(left)
    elif isinstance(right, CarExpr) and isinstance(left, CuntzPoly):
        right = psi_map(right)
    return lift(left, right), lift(right, left)


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.pos = 0

    def error(self, message: str) -> ExprError:
        return ExprError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected digits")
        return self.text[start:self.pos]

    def parse(self) -> Value:
        value = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing input")
        return value

    def expr(self) -> Value:
        negate = False
        if self.peek() == "-":
            self.pos += 1
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            left, right = _promote(value, rhs, self.n)
            if isinstance(left, Scalar) != isinstance(right, Scalar):
                raise self.error("cannot add a scalar to an operator")
            value = left + right if op == "+" else left - right
        return value

    def term(self) -> Value:
        value = self.factor()
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                c = self.peek()
            if c == "" or c in "+-),]":
                break
            if c not in "sabE(r0123456789":
                break
            rhs = self.factor()
            left, right = _promote(value, rhs, self.n)
            if isinstance(left, Scalar):
                value = right.scale(left) if not isinstance(right, Scalar) \
                    else left * right
            elif isinstance(right, Scalar):
                value = left.scale(right)
            else:
                value = left * right
        return value

    def factor(self) -> Value:
        value = self.atom()
        while self.peek() == "'":
            self.pos += 1
            if isinstance(value, Scalar):
                value = value.conjugate()
            else:
                value = value.adjoint()
        return value

    def atom(self) -> Value:
        c = self.peek()
        if c == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return value
        if c == "r":
            if self.text[self.pos:self.pos + 2] != "r2":
                raise self.error("unknown identifier (did you mean r2?)")
            self.pos += 2
            return SQRT2
        if c.isdigit():
            num = int(self.take_digits())
            if self.peek() == "/":
                self.pos += 1
                den = int(self.take_digits())
                return Scalar(Fraction(num, den))
            return Scalar(Fraction(num))
        if c == "s":
            if self.text[self.pos:self.pos + 5] == "sqrt2":
                self.pos += 5
                return SQRT2
            self.pos += 1
            word = parse_word(self.take_digits(), self.n)
            return CuntzPoly.monomial(self.n, word, ())
        if c == "a":
            self.pos += 1
            index = int(self.take_digits())
            if index < 1:
                raise self.error("fermion modes are numbered from 1")
            return CarExpr.generator(index)
        if c == "E":
            self.pos += 1
            return self.unit()
        if c == "b":
            self.pos += 1
            return self.mixture_atom()
        raise self.error("expected an expression" if c == ""
                         else f"unexpected character {c!r}")

    def unit(self) -> Value:
        if self.peek() != "[":
            raise self.error("expected '[' after E")
        self.pos += 1
        j = parse_word(self.take_digits(), self.n)
        if self.peek() != ",":
            raise self.error("expected ',' in matrix unit")
        self.pos += 1
        k = parse_word(self.take_digits(), self.n)
        if self.peek() != "]":
            raise self.error("expected ']'")
        self.pos += 1
        return CuntzPoly.matrix_unit(self.n, j, k)

    def mixture_atom(self) -> Value:
        if self.peek() != "[":
            raise self.error("expected '[' after b")
        self.pos += 1
        start = self.pos
        depth = 1
        while self.pos < len(self.text):
            if self.text[self.pos] == "]":
                depth -= 1
                if depth == 0:
                    break
            self.pos += 1
        if depth != 0:
            raise self.error("expected ']'")
        body = self.text[start:self.pos].strip()
        self.pos += 1
        try:
            k = Fraction(body)
        except ValueError:
            raise ExprError(f"bad mixture index {body!r}", start) from None
        return mixture(k)


def parse_expr(text: str, n: int = 2) -> Value:
    """Parse an expression over O_n, the fermion algebra, or scalars."""
    if not text.strip():
        raise ExprError("empty expression", 0)
    return _Parser(text, n).parse()


def as_cuntz(value: Value, n: int = 2) -> CuntzPoly:
    """Coerce a parsed value to a polynomial in O_n."""
    if isinstance(value, Scalar):
        return CuntzPoly.from_scalar(n, value)
    if isinstance(value, CarExpr):
        return psi_map(value)
    return value
