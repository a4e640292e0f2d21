"""Exact arithmetic over the field Q(i, sqrt(2)).

Every value is stored as four rational coordinates

    x = a + b*sqrt(2) + i*(c + d*sqrt(2))

with a, b, c, d instances of fractions.Fraction.  This field is closed
under all the operations the construction pipeline needs: the base
operator entries live in (1/sqrt(2))*Z[i], the doubling steps only add,
multiply and conjugate such entries, and the final multiplication
constants collapse back to plain integers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

_NumberLike = Union[int, Fraction, "Scalar"]


class Scalar:
    """An element a + b*sqrt(2) + i*(c + d*sqrt(2)) with rational a, b, c, d."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)

    # -- constructors -------------------------------------------------

    @staticmethod
    def coerce(x: _NumberLike) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    @staticmethod
    def i() -> "Scalar":
        return Scalar(0, 0, 1, 0)

    @staticmethod
    def sqrt2() -> "Scalar":
        return Scalar(0, 1, 0, 0)

    @staticmethod
    def inv_sqrt2() -> "Scalar":
        return Scalar(0, Fraction(1, 2), 0, 0)

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def is_real(self) -> bool:
        return not (self.c or self.d)

    def is_integer(self) -> bool:
        return self.is_rational() and self.a.denominator == 1

    def as_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self!r} is not an integer")
        return int(self.a)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.a

    # -- ring operations ----------------------------------------------

    def __add__(self, other: _NumberLike) -> "Scalar":
        o = Scalar.coerce(other)
        return Scalar(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other: _NumberLike) -> "Scalar":
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: _NumberLike) -> "Scalar":
        return Scalar.coerce(other) + (-self)

    def __mul__(self, other: _NumberLike) -> "Scalar":
        o = Scalar.coerce(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        # real*real and imag*imag cross terms, with sqrt(2)^2 = 2
        ra = a1 * a2 + 2 * b1 * b2 - c1 * c2 - 2 * d1 * d2
        rb = a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2
        ia = a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2)
        ib = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2
        return Scalar(ra, rb, ia, ib)

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        """Complex conjugate (i -> -i); sqrt(2) is fixed."""
        return Scalar(self.a, self.b, -self.c, -self.d)

    def _real_inverse(self) -> "Scalar":
        # invert a + b*sqrt(2) by the rational conjugate a - b*sqrt(2)
        norm = self.a * self.a - 2 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar(self.a / norm, -self.b / norm)

    def inverse(self) -> "Scalar":
        num = self.conjugate()
        den = self * num  # real: a^2-stuff, lands in Q(sqrt(2))
        return num * den._real_inverse()

    def __truediv__(self, other: _NumberLike) -> "Scalar":
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other: _NumberLike) -> "Scalar":
        return Scalar.coerce(other) * self.inverse()

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Scalar)):
            o = Scalar.coerce(other)
            return (self.a, self.b, self.c, self.d) == (o.a, o.b, o.c, o.d)
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __bool__(self):
        return not self.is_zero()

    # -- conversion ---------------------------------------------------

    def __complex__(self) -> complex:
        r2 = 2 ** 0.5
        return complex(float(self.a) + float(self.b) * r2,
                       float(self.c) + float(self.d) * r2)

    def quad(self):
        """The four rational coordinates (a, b, c, d)."""
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        parts = []
        for coef, unit in ((self.a, ""), (self.b, "*r2"), (self.c, "*i"),
                           (self.d, "*i*r2")):
            if coef:
                parts.append(f"{coef}{unit}")
        return "Scalar(" + (" + ".join(parts) if parts else "0") + ")"


ZERO = Scalar(0)
ONE = Scalar(1)
