"""Gaussian rationals: exact complex numbers with Fraction parts."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union["ComplexQ", Fraction, int]


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class ComplexQ:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexQ is immutable")

    @classmethod
    def coerce(cls, value: Scalar) -> "ComplexQ":
        if isinstance(value, ComplexQ):
            return value
        if isinstance(value, (Rational, int)):
            return cls(value)
        if isinstance(value, str):
            return cls(Fraction(value))
        raise TypeError(f"cannot use {value!r} as an exact scalar")

    def __add__(self, other):
        o = ComplexQ.coerce(other)
        return ComplexQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = ComplexQ.coerce(other)
        return ComplexQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return ComplexQ.coerce(other) - self

    def __neg__(self):
        return ComplexQ(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, (ComplexQ, Rational, int)):
            return NotImplemented
        o = ComplexQ.coerce(other)
        return ComplexQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = ComplexQ.coerce(other)
        norm = o.abs_sq()
        if norm == 0:
            raise ZeroDivisionError("division by zero scalar")
        return self * ComplexQ(o.re / norm, -o.im / norm)

    def __rtruediv__(self, other):
        return ComplexQ.coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return ComplexQ(1) / (self ** (-e))
        out = ComplexQ(1)
        for _ in range(e):
            out = out * self
        return out

    def conjugate(self) -> "ComplexQ":
        return ComplexQ(self.re, -self.im)

    def abs_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = ComplexQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"ComplexQ({format_fraction(self.re)!r}, {format_fraction(self.im)!r})"

    def __str__(self):
        if self.im == 0:
            return format_fraction(self.re)
        im = format_fraction(abs(self.im))
        im = "i" if im == "1" else f"{im}i"
        if self.re == 0:
            return f"-{im}" if self.im < 0 else im
        sign = "-" if self.im < 0 else "+"
        return f"{format_fraction(self.re)}{sign}{im}"


ZERO = ComplexQ(0)
ONE = ComplexQ(1)
I_UNIT = ComplexQ(0, 1)
FOURTH_ROOTS = (ONE, I_UNIT, -ONE, -I_UNIT)
