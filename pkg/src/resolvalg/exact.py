"""Exact Gaussian-rational scalars for the symbolic layer.

All symbolic coefficients in this package are complex numbers whose real
and imaginary parts are exact rationals, so that term equality, character
evaluation and ideal membership in one-dimensional representations are
decidable without tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction, str]
ScalarLike = Union[int, Fraction, str, "ComplexRational"]


def frac(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and strings like "3/2" to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class ComplexRational:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def coerce(x: ScalarLike) -> "ComplexRational":
        if isinstance(x, ComplexRational):
            return x
        return ComplexRational(frac(x), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "ComplexRational":
        d = self.abs2()
        if d == 0:
            raise ZeroDivisionError("inverse of zero")
        return ComplexRational(self.re / d, -self.im / d)

    def __add__(self, other: ScalarLike) -> "ComplexRational":
        o = ComplexRational.coerce(other)
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "ComplexRational":
        o = ComplexRational.coerce(other)
        return ComplexRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: ScalarLike) -> "ComplexRational":
        return ComplexRational.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "ComplexRational":
        o = ComplexRational.coerce(other)
        return ComplexRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "ComplexRational":
        return self * ComplexRational.coerce(other).inverse()

    def __rtruediv__(self, other: ScalarLike) -> "ComplexRational":
        return ComplexRational.coerce(other) * self.inverse()

    def __neg__(self) -> "ComplexRational":
        return ComplexRational(-self.re, -self.im)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __abs__(self) -> float:
        return abs(complex(self))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        istr = "i" if mag == 1 else f"{mag}*i"
        return f"{self.re}{sign}{istr}"

    def to_json(self) -> list:
        return [str(self.re), str(self.im)]

    @staticmethod
    def from_json(data) -> "ComplexRational":
        re, im = data
        return ComplexRational(frac(re), frac(im))


CQ = ComplexRational
ZERO = ComplexRational()
ONE = ComplexRational(Fraction(1))
I = ComplexRational(Fraction(0), Fraction(1))


def cq(re: RationalLike = 0, im: RationalLike = 0) -> ComplexRational:
    """Shorthand constructor accepting ints, Fractions or "a/b" strings."""
    return ComplexRational(frac(re), frac(im))
