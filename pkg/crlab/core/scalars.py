"""Exact scalars over the rationals and the Gaussian rationals.

Rationals are plain :class:`fractions.Fraction` values. Elements of ℚ(i) are
:class:`Gaussian` pairs of fractions. A :class:`Field` object fixes which of
the two a vector or matrix holds, so the two kinds never mix in one value.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, "Gaussian"]


def _fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Gaussian):
        if value.im:
            raise ValueError(f"{value} is not rational")
        return value.re
    return Fraction(value)


@dataclass(frozen=True, eq=False)
class Gaussian:
    """Gaussian rational ``re + im*i`` with exact components."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _fraction(self.re))
        object.__setattr__(self, "im", _fraction(self.im))

    @staticmethod
    def _lift(other) -> "Gaussian":
        if isinstance(other, Gaussian):
            return other
        if isinstance(other, (int, Fraction)):
            return Gaussian(Fraction(other), Fraction(0))
        return NotImplemented

    def conjugate(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Gaussian(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Gaussian(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other.im:
            return Gaussian(self.re * other.re, self.im * other.re)
        if not self.im:
            return Gaussian(self.re * other.re, self.re * other.im)
        return Gaussian(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * Gaussian(other.re / norm, -other.im / norm)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Gaussian({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


I = Gaussian(Fraction(0), Fraction(1))


@dataclass(frozen=True)
class Field:
    """Coefficient field tag: ``"Q"`` or ``"Q(i)"``."""

    name: str

    @property
    def is_complex(self) -> bool:
        return self.name == "Q(i)"

    @property
    def zero(self) -> Scalar:
        return Gaussian(Fraction(0)) if self.is_complex else Fraction(0)

    @property
    def one(self) -> Scalar:
        return Gaussian(Fraction(1)) if self.is_complex else Fraction(1)

    def coerce(self, value) -> Scalar:
        if isinstance(value, str):
            value = parse_scalar(value)
        if self.is_complex:
            return value if isinstance(value, Gaussian) else Gaussian(_fraction(value))
        return _fraction(value)

    def conjugate(self, value: Scalar) -> Scalar:
        return value.conjugate() if isinstance(value, Gaussian) else value

    def __str__(self):
        return self.name


Q = Field("Q")
QI = Field("Q(i)")


def field_of(name: str) -> Field:
    if name == Q.name:
        return Q
    if name in (QI.name, "QI", "Q[i]"):
        return QI
    raise ValueError(f"Unknown field {name!r}; expected 'Q' or 'Q(i)'")


def real_part(value: Scalar) -> Fraction:
    return value.re if isinstance(value, Gaussian) else _fraction(value)


def imag_part(value: Scalar) -> Fraction:
    return value.im if isinstance(value, Gaussian) else Fraction(0)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"a/b"`` or ``"a/b+c/d*i"`` (signs optional, ``i`` alone allowed)."""
    body = text.replace(" ", "")
    if not body:
        raise ValueError("empty scalar")
    if not body.endswith("i"):
        return Fraction(body)
    body = body[:-1]
    if body.endswith("*"):
        body = body[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split > 0 and body[split - 1] not in "eE/":
        real, imag = body[:split], body[split:]
    else:
        real, imag = "0", body
    if imag in ("", "+"):
        im = Fraction(1)
    elif imag == "-":
        im = Fraction(-1)
    else:
        im = Fraction(imag)
    return Gaussian(Fraction(real), im)


def format_scalar(value: Scalar) -> str:
    """Inverse of :func:`parse_scalar`; rationals print as ``a`` or ``a/b``."""
    if not isinstance(value, Gaussian):
        return str(_fraction(value))
    if not value.im:
        return str(value.re)
    if value.im == 1:
        imag = "i"
    elif value.im == -1:
        imag = "-i"
    else:
        imag = f"{value.im}*i"
    if not value.re:
        return imag
    sign = "" if imag.startswith("-") else "+"
    return f"{value.re}{sign}{imag}"
