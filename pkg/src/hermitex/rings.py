"""Coefficient rings: exact rationals, exact complex rationals, and floats."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import CoercionError, FloatRangeError


class CoefficientRing(enum.Enum):
    RATIONAL = "rational"
    COMPLEX_RATIONAL = "complex_rational"
    FLOAT64 = "float64"
    COMPLEX_FLOAT64 = "complex_float64"

    @property
    def is_exact(self) -> bool:
        return self in (CoefficientRing.RATIONAL, CoefficientRing.COMPLEX_RATIONAL)

    @property
    def is_complex(self) -> bool:
        return self in (CoefficientRing.COMPLEX_RATIONAL, CoefficientRing.COMPLEX_FLOAT64)

    @property
    def complex_extension(self) -> CoefficientRing:
        if self is CoefficientRing.RATIONAL:
            return CoefficientRing.COMPLEX_RATIONAL
        if self is CoefficientRing.FLOAT64:
            return CoefficientRing.COMPLEX_FLOAT64
        return self

    @property
    def float_counterpart(self) -> CoefficientRing:
        if self is CoefficientRing.RATIONAL:
            return CoefficientRing.FLOAT64
        if self is CoefficientRing.COMPLEX_RATIONAL:
            return CoefficientRing.COMPLEX_FLOAT64
        return self

    def zero(self):
        return coerce(0, self)

    def one(self):
        return coerce(1, self)


@dataclass(frozen=True)
class ComplexRational:
    """Exact Gaussian-rational number re + im*i."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def _lift(other):
        if isinstance(other, ComplexRational):
            return other
        if isinstance(other, Rational):
            return ComplexRational(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ComplexRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ComplexRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        den = other.re * other.re + other.im * other.im
        if den == 0:
            raise ZeroDivisionError("complex rational division by zero")
        num = self * other.conjugate()
        return ComplexRational(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return ComplexRational(1) / self ** (-n)
        result = ComplexRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> ComplexRational:
        return ComplexRational(self.re, -self.im)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexRational({self.re!s}, {self.im!s})"

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


I = ComplexRational(0, 1)


def _is_real_scalar(value) -> bool:
    return isinstance(value, (int, float, Fraction)) and not isinstance(value, bool)


def coerce(value, ring: CoefficientRing):
    """Convert ``value`` into ``ring`` without loss, or raise CoercionError.

    Floats never enter the exact rings implicitly; exact values enter the
    float rings by rounding.
    """
    if isinstance(value, bool):
        raise CoercionError(f"booleans are not ring elements: {value!r}")
    if ring is CoefficientRing.RATIONAL:
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, ComplexRational) and value.im == 0:
            return value.re
    elif ring is CoefficientRing.COMPLEX_RATIONAL:
        if isinstance(value, (int, Fraction)):
            return ComplexRational(Fraction(value))
        if isinstance(value, ComplexRational):
            return value
    elif ring is CoefficientRing.FLOAT64:
        if isinstance(value, (int, Fraction, float)):
            return to_float_scalar(value)
        if isinstance(value, ComplexRational) and value.im == 0:
            return to_float_scalar(value.re)
        if isinstance(value, complex) and value.imag == 0:
            return value.real
    elif ring is CoefficientRing.COMPLEX_FLOAT64:
        if isinstance(value, (int, Fraction, float, complex, ComplexRational)):
            return to_float_scalar(value, complex_out=True)
    raise CoercionError(f"cannot represent {value!r} in ring {ring.name}")


def ring_of(value) -> CoefficientRing:
    """Smallest ring holding a scalar."""
    if isinstance(value, bool):
        raise CoercionError(f"booleans are not ring elements: {value!r}")
    if isinstance(value, (int, Fraction)):
        return CoefficientRing.RATIONAL
    if isinstance(value, ComplexRational):
        return CoefficientRing.COMPLEX_RATIONAL
    if isinstance(value, float):
        return CoefficientRing.FLOAT64
    if isinstance(value, complex):
        return CoefficientRing.COMPLEX_FLOAT64
    raise CoercionError(f"not a supported scalar: {value!r}")


def _fraction_to_float(q: Fraction) -> float:
    try:
        return float(q)
    except OverflowError:
        raise FloatRangeError(f"rational of magnitude ~10^{_log10(q):.0f} exceeds float range") from None


def _log10(q: Fraction) -> float:
    return math.log10(abs(q.numerator)) - math.log10(q.denominator)


def to_float_scalar(value, complex_out: bool = False):
    """Round an exact or float scalar to float (or complex when needed)."""
    if isinstance(value, ComplexRational):
        z = complex(_fraction_to_float(value.re), _fraction_to_float(value.im))
        return z
    if isinstance(value, complex):
        return value
    if isinstance(value, (int, Fraction)):
        x = _fraction_to_float(Fraction(value))
    elif isinstance(value, float):
        x = value
    else:
        raise CoercionError(f"not a supported scalar: {value!r}")
    return complex(x) if complex_out else x


def exact_from_float(x: float) -> Fraction:
    """The exact dyadic rational carried by a finite float."""
    if not math.isfinite(x):
        raise CoercionError(f"non-finite value {x!r} has no exact counterpart")
    return Fraction(x)


def exact_from_complex(z: complex) -> ComplexRational:
    return ComplexRational(exact_from_float(z.real), exact_from_float(z.imag))
