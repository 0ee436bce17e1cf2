"""Small whitespace-insensitive scanner shared by the textual formats."""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .scalars import ScalarValue

_SYMBOL = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_UINT = re.compile(r"[0-9]+")


class Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self, literal: str) -> bool:
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def accept(self, literal: str) -> bool:
        if self.peek(literal):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.accept(literal):
            self.fail("unexpected input", [repr(literal)])

    def fail(self, message: str, expected: list[str]) -> None:
        self.skip_ws()
        found = self.text[self.pos:self.pos + 10] or "end of input"
        raise ParseError(f"{message} {found!r}", self.text, self.pos, expected)

    def expect_end(self) -> None:
        if not self.at_end():
            self.fail("trailing input", ["end of input"])

    def uint(self) -> int:
        self.skip_ws()
        m = _UINT.match(self.text, self.pos)
        if not m:
            self.fail("expected a nonnegative integer, found", ["digit"])
        self.pos = m.end()
        return int(m.group())

    def rational(self) -> Fraction:
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        num = self.uint()
        den = 1
        if self.accept("/"):
            den = self.uint()
            if den == 0:
                raise ParseError("zero denominator", self.text, self.pos, ["positive integer"])
        return sign * Fraction(num, den)

    def value(self) -> ScalarValue:
        self.skip_ws()
        m = _SYMBOL.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            label = m.group()
            self.skip_ws()
            if self.peek("+") or self.peek("-"):
                return ScalarValue(label, self.rational())
            return ScalarValue(label, Fraction(0))
        if self.pos < len(self.text) and (self.text[self.pos] in "+-" or self.text[self.pos].isdigit()):
            return ScalarValue("", self.rational())
        self.fail("expected a value, found", ["symbol", "rational"])

    def value_list(self) -> list[ScalarValue]:
        values = [self.value()]
        while self.accept(","):
            values.append(self.value())
        return values


def parse_values(text: str) -> list[ScalarValue]:
    """Comma-separated values, optionally wrapped in brackets or parentheses."""
    sc = Scanner(text)
    closer = None
    if sc.accept("["):
        closer = "]"
    elif sc.accept("("):
        closer = ")"
    values = sc.value_list()
    if closer:
        sc.expect(closer)
    sc.expect_end()
    return values


def parse_value(text: str) -> ScalarValue:
    sc = Scanner(text)
    v = sc.value()
    sc.expect_end()
    return v
