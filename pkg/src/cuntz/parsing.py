"""Text grammar for algebra elements.

    element := ['+'|'-'] term (('+'|'-') term)*  |  '0'
    term    := [coeff ['*']] word
    word    := 'I' | group {group}
    group   := 'S' ['*'] '[' digits {',' digits} ']' ['*']
    coeff   := rational ['i'] [('+'|'-') rational 'i']  |  'i'  |  '(' coeff ')'

Adjacent groups multiply, so S[1]S[2] is S_(1,2) and S[1]S*[2] is S_1 S_2^*.
A star on either side of the bracket takes the adjoint of that group.
Whitespace is ignored.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .algebra import AlgebraElement, chi, identity, mul, zero
from .errors import ExpressionSyntaxError, LetterOutOfRange
from .scalars import ComplexQ


@dataclass(frozen=True)
class ParsedExpression:
    element: AlgebraElement
    spans: Dict[int, Tuple[int, int]] = field(default_factory=dict)


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.pos = 0

    def error(self, message: str, pos: Optional[int] = None):
        raise ExpressionSyntaxError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.eat(ch):
            found = self.peek() or "end of input"
            self.error(f"expected {ch!r}, found {found!r}")

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected digits")
        return int(self.text[start : self.pos])

    def rational(self) -> Fraction:
        num = self.integer()
        save = self.pos
        if self.eat("/"):
            if not self.peek().isdigit():
                self.pos = save
                self.error("expected denominator after '/'")
            start = self.pos
            den = self.integer()
            if den == 0:
                self.error("zero denominator", start)
            return Fraction(num, den)
        return Fraction(num)

    # coefficients -----------------------------------------------------

    def imaginary_tail(self) -> Optional[Fraction]:
        """Parse "[rational] i" and return its magnitude, or None without consuming."""
        save = self.pos
        mag = Fraction(1) if self.peek() == "i" else None
        if mag is None and self.peek().isdigit():
            mag = self.rational()
        if mag is not None and self.eat("i"):
            return mag
        self.pos = save
        return None

    def coeff_body(self, negative: bool = False) -> ComplexQ:
        sign0 = -1 if negative else 1
        im = self.imaginary_tail()
        if im is not None:
            return ComplexQ(0, sign0 * im)
        value = ComplexQ(sign0 * self.rational())
        save = self.pos
        sign = self.peek()
        if sign and sign in "+-":
            self.pos += 1
            im = self.imaginary_tail()
            # the imaginary part belongs to this coefficient only if a word follows
            if im is not None and self.peek() in ("S", "I", "*", ")"):
                return ComplexQ(value.re, im if sign == "+" else -im)
            self.pos = save
        return value

    def coeff(self) -> Optional[ComplexQ]:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.coeff_body(self.eat("-"))
            self.expect(")")
            return value
        if ch.isdigit() or ch == "i":
            return self.coeff_body()
        return None

    # words --------------------------------------------------------------

    def letters(self) -> Tuple[int, ...]:
        self.expect("[")
        out = []
        while True:
            self.skip()
            pos = self.pos
            letter = self.integer()
            if not 1 <= letter <= self.n:
                raise LetterOutOfRange(letter, self.n, pos)
            out.append(letter)
            if self.eat(","):
                continue
            self.expect("]")
            return tuple(out)

    def group(self) -> AlgebraElement:
        self.expect("S")
        star = self.eat("*")
        word = self.letters()
        if not star and self.eat("*"):
            star = True
        return chi((), word, self.n) if star else chi(word, (), self.n)

    def word(self) -> AlgebraElement:
        ch = self.peek()
        if ch == "I":
            self.pos += 1
            return identity(self.n)
        if ch != "S":
            self.error(f"expected a word ('I' or 'S[...]'), found {ch or 'end of input'!r}")
        out = self.group()
        while self.peek() == "S":
            out = mul(out, self.group())
        return out

    def term(self) -> AlgebraElement:
        c = self.coeff()
        if c is not None:
            self.eat("*")
        w = self.word()
        return w if c is None else c * w

    def element(self) -> ParsedExpression:
        self.skip()
        if self.text.strip() == "0":
            return ParsedExpression(zero(self.n), {})
        total = zero(self.n)
        spans = {}
        index = 0
        sign = 1
        if self.peek() in ("+", "-") and self.peek():
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        while True:
            self.skip()
            start = self.pos
            t = self.term()
            spans[index] = (start, len(self.text[: self.pos].rstrip()))
            total = total + (t if sign > 0 else -t)
            index += 1
            ch = self.peek()
            if not ch:
                return ParsedExpression(total, spans)
            if ch not in "+-":
                self.error(f"unexpected {ch!r}")
            sign = -1 if ch == "-" else 1
            self.pos += 1


def parse_element(text: str, n: int) -> ParsedExpression:
    """Parse text such as "S[1]S*[2] + 1/2 I" into a canonical element."""
    if n < 2:
        raise ValueError(f"alphabet size must be at least 2, got {n}")
    if not text.strip():
        raise ExpressionSyntaxError("empty expression", text, 0)
    return _Parser(text, n).element()


def parse(text: str, n: int) -> AlgebraElement:
    return parse_element(text, n).element
