"""Exact Gaussian rationals ``a + b i`` with ``a, b`` in Q."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["GaussianRational", "as_gaussian", "parse_rational", "format_rational"]


def parse_rational(text) -> Fraction:
    """Parse ``"num/den"``, ``"num"`` or an int/Fraction into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text.strip())
    raise TypeError(f"cannot read an exact rational from {text!r}")


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class GaussianRational:
    __slots__ = ("real", "imag", "_hash")

    def __init__(self, real=0, imag=0):
        self.real = real if type(real) is Fraction else Fraction(real)
        self.imag = imag if type(imag) is Fraction else Fraction(imag)
        self._hash = None

    @classmethod
    def parse(cls, text) -> "GaussianRational":
        """Read ``"1/3"``, ``["1/3", "-2/5"]`` or ``{"re": ..., "im": ...}``."""
        if isinstance(text, GaussianRational):
            return text
        if isinstance(text, dict):
            return cls(parse_rational(text["re"]), parse_rational(text.get("im", 0)))
        if isinstance(text, (list, tuple)):
            re, im = text
            return cls(parse_rational(re), parse_rational(im))
        return cls(parse_rational(text))

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.real + other.real, self.imag + other.imag)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.real - other.real, self.imag - other.imag)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.real, self.imag, other.real, other.imag
        if not b and not d:
            return GaussianRational(a * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        c, d = other.real, other.imag
        if not d:
            if not c:
                raise ZeroDivisionError("division by zero Gaussian rational")
            return GaussianRational(self.real / c, self.imag / c)
        norm = c * c + d * d
        a, b = self.real, self.imag
        return GaussianRational((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return GaussianRational(-self.real, -self.imag)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.real, -self.imag)

    # comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        exact = _coerce(other)
        if exact is NotImplemented:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.real == exact.real and self.imag == exact.imag

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.real) if not self.imag else hash((self.real, self.imag))
        return self._hash

    def __bool__(self):
        return bool(self.real) or bool(self.imag)

    def __complex__(self):
        return complex(float(self.real), float(self.imag))

    def is_real(self) -> bool:
        return not self.imag

    def sort_key(self) -> tuple:
        re, im = self.real, self.imag
        return (re.numerator, re.denominator, im.numerator, im.denominator)

    # text -----------------------------------------------------------------

    def to_json(self) -> list[str]:
        return [format_rational(self.real), format_rational(self.imag)]

    def __str__(self):
        if not self.imag:
            return str(self.real)
        if not self.real:
            return f"{self.imag}i"
        sign = "+" if self.imag > 0 else "-"
        return f"{self.real}{sign}{abs(self.imag)}i"

    def __repr__(self):
        return f"GaussianRational({self})"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Rational)):
        return GaussianRational(Fraction(value))
    return NotImplemented


def as_gaussian(value) -> GaussianRational:
    """Promote ints, Fractions and rational strings; reject floats."""
    out = _coerce(value)
    if out is NotImplemented:
        if isinstance(value, (str, list, tuple, dict)):
            return GaussianRational.parse(value)
        raise TypeError(f"{value!r} is not an exact Gaussian rational")
    return out
