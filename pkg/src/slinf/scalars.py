"""Exact scalar values for weight functions.

A value is a coset label together with a rational offset.  The empty label is
the rational coset; any other label (``r2``, ``tau``, ...) stands for an
arbitrary fixed complex number outside it.  Two values differ by an integer
exactly when the labels agree and the offsets differ by an integer, and only
values with the same label are ordered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=False)
class ScalarValue:
    label: str = ""
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.offset, Fraction):
            object.__setattr__(self, "offset", Fraction(self.offset))

    def __str__(self) -> str:
        if not self.label:
            return str(self.offset)
        if self.offset == 0:
            return self.label
        sign = "+" if self.offset > 0 else "-"
        return f"{self.label}{sign}{abs(self.offset)}"

    def __repr__(self) -> str:
        return f"ScalarValue({str(self)!r})"

    def class_key(self) -> tuple[str, Fraction]:
        """Key identifying the integrality class of this value."""
        return (self.label, self.offset - math.floor(self.offset))

    def is_rational(self) -> bool:
        return not self.label


def value(label: str = "", offset: int | Fraction | str = 0) -> ScalarValue:
    return ScalarValue(label, Fraction(offset))


def int_congruent(a: ScalarValue, b: ScalarValue) -> bool:
    return a.label == b.label and (a.offset - b.offset).denominator == 1


def comparable(a: ScalarValue, b: ScalarValue) -> bool:
    return a.label == b.label


def difference(a: ScalarValue, b: ScalarValue) -> Fraction:
    """``a - b`` as a rational; only defined when the labels agree."""
    if a.label != b.label:
        raise ValueError(f"{a} and {b} lie in different cosets; their difference is not rational")
    return a.offset - b.offset


def shift(a: ScalarValue, k: int | Fraction) -> ScalarValue:
    return ScalarValue(a.label, a.offset + k)
