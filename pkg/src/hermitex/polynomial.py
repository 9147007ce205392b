"""Dense univariate polynomials over a small family of coefficient rings.

Coefficients are stored ascending (``coeffs[k]`` multiplies x**k) with no
trailing zeros; the zero polynomial is the empty tuple and has degree -1.
Polynomials are immutable.
"""
from __future__ import annotations

import math
from typing import Iterable

from .errors import CoercionError, FloatRangeError, RingMismatchError
from .rings import (
    CoefficientRing,
    ComplexRational,
    coerce,
    exact_from_complex,
    exact_from_float,
    ring_of,
    to_float_scalar,
)

RATIONAL = CoefficientRing.RATIONAL
COMPLEX_RATIONAL = CoefficientRing.COMPLEX_RATIONAL
FLOAT64 = CoefficientRing.FLOAT64
COMPLEX_FLOAT64 = CoefficientRing.COMPLEX_FLOAT64

_RING_RANK = {RATIONAL: 0, COMPLEX_RATIONAL: 1, FLOAT64: 2, COMPLEX_FLOAT64: 3}


def _infer_ring(values) -> CoefficientRing:
    rings = {ring_of(v) for v in values}
    if not rings:
        return RATIONAL
    floaty = FLOAT64 in rings or COMPLEX_FLOAT64 in rings
    complexy = COMPLEX_RATIONAL in rings or COMPLEX_FLOAT64 in rings
    if floaty:
        return COMPLEX_FLOAT64 if complexy else FLOAT64
    return COMPLEX_RATIONAL if complexy else RATIONAL


def _strip(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Immutable dense polynomial.

    >>> Polynomial([-2, 0, 4]).degree
    2
    """

    __slots__ = ("_coeffs", "_ring")

    def __init__(self, coeffs: Iterable = (), ring: CoefficientRing | None = None):
        values = list(coeffs)
        if ring is None:
            ring = _infer_ring(values)
        self._ring = ring
        self._coeffs = _strip([coerce(v, ring) for v in values])

    @classmethod
    def _raw(cls, coeffs: list, ring: CoefficientRing) -> Polynomial:
        # coefficients already in ring
        p = cls.__new__(cls)
        p._ring = ring
        p._coeffs = _strip(coeffs)
        return p

    @classmethod
    def zero(cls, ring: CoefficientRing = RATIONAL) -> Polynomial:
        return cls._raw([], ring)

    @classmethod
    def constant(cls, value, ring: CoefficientRing | None = None) -> Polynomial:
        return cls([value], ring)

    @classmethod
    def monomial(cls, n: int, ring: CoefficientRing = RATIONAL, coeff=1) -> Polynomial:
        if n < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls._raw([ring.zero()] * n + [coerce(coeff, ring)], ring)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def ring(self) -> CoefficientRing:
        return self._ring

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self):
        return self._coeffs[-1] if self._coeffs else self._ring.zero()

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        if k < 0:
            raise IndexError("negative coefficient index")
        return self._ring.zero()

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._ring is other._ring and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._ring, self._coeffs))

    def __repr__(self):
        body = ", ".join(str(c) for c in self._coeffs)
        return f"Polynomial([{body}], {self._ring.name})"

    def __str__(self):
        from .polytext import format_polynomial

        return format_polynomial(self)

    def __neg__(self):
        return Polynomial._raw([-c for c in self._coeffs], self._ring)

    def __add__(self, other):
        if isinstance(other, Polynomial):
            return add(self, other)
        try:
            return add(self, Polynomial.constant(other, self._ring))
        except CoercionError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Polynomial):
            return add(self, -other)
        try:
            return add(self, -Polynomial.constant(other, self._ring))
        except CoercionError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return mul(self, other)
        try:
            return self.scale(other)
        except CoercionError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = coerce(scalar, self._ring)
        return Polynomial._raw([c / s for c in self._coeffs], self._ring)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Polynomial.constant(1, self._ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, z):
        return evaluate(self, z)

    def scale(self, scalar) -> Polynomial:
        s = coerce(scalar, self._ring)
        return Polynomial._raw([c * s for c in self._coeffs], self._ring)

    def to_ring(self, ring: CoefficientRing) -> Polynomial:
        """Re-express in ``ring``; exact-to-float conversions round."""
        if ring is self._ring:
            return self
        return Polynomial(self._coeffs, ring)

    def real_part(self) -> Polynomial:
        if self._ring is COMPLEX_RATIONAL:
            return Polynomial._raw([c.re for c in self._coeffs], RATIONAL)
        if self._ring is COMPLEX_FLOAT64:
            return Polynomial._raw([c.real for c in self._coeffs], FLOAT64)
        return self

    def imag_part(self) -> Polynomial:
        if self._ring is COMPLEX_RATIONAL:
            return Polynomial._raw([c.im for c in self._coeffs], RATIONAL)
        if self._ring is COMPLEX_FLOAT64:
            return Polynomial._raw([c.imag for c in self._coeffs], FLOAT64)
        return Polynomial.zero(self._ring)


def _same_ring(p: Polynomial, q: Polynomial) -> CoefficientRing:
    if p.ring is not q.ring:
        raise RingMismatchError(f"ring mismatch: {p.ring.name} vs {q.ring.name}")
    return p.ring


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    ring = _same_ring(p, q)
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] = out[k] + c
    return Polynomial._raw(out, ring)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Cauchy product."""
    ring = _same_ring(p, q)
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return Polynomial.zero(ring)
    out = [ring.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return Polynomial._raw(out, ring)


def derivative(p: Polynomial, order: int = 1) -> Polynomial:
    """The order-fold formal derivative."""
    if order < 0:
        raise ValueError("derivative order must be nonnegative")
    if order == 0:
        return p
    out = []
    falling = math.factorial(order)  # k!/(k-order)! at k = order
    for k in range(order, len(p.coeffs)):
        if k > order:
            falling = falling * k // (k - order)
        out.append(p.coeffs[k] * falling)
    return Polynomial._raw(out, p.ring)


def _candidate_rings(ring: CoefficientRing, scalar) -> tuple:
    # A complex-typed scalar selects the complex extension even when its
    # imaginary part happens to be zero.
    if isinstance(scalar, (ComplexRational, complex)):
        return (ring.complex_extension,)
    return (ring, ring.complex_extension)


def _horner(coeffs, z, zero):
    acc = zero
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _eval_rational_at_float(p: Polynomial, z: float) -> float:
    # Homogeneous integer Horner on p(num/den) * L * den**d, rounded once.
    num, den = exact_from_float(z).as_integer_ratio()
    coeffs = p.coeffs
    if not coeffs:
        return 0.0
    lcm = math.lcm(*(c.denominator for c in coeffs))
    ints = [c.numerator * (lcm // c.denominator) for c in coeffs]
    d = len(ints) - 1
    acc = ints[d]
    den_pow = 1
    for k in range(d - 1, -1, -1):
        den_pow *= den
        acc = acc * num + ints[k] * den_pow
    try:
        return acc / (lcm * den_pow)
    except OverflowError:
        return math.copysign(math.inf, acc)


def evaluate(p: Polynomial, z):
    """Horner evaluation at z.

    z may be any scalar coercible into p's ring or its complex extension.
    A Python float (or complex) point on an exact polynomial is taken at its
    exact binary value; the exact result is then rounded once to float
    (or complex).
    """
    ring = p.ring
    if ring is RATIONAL and isinstance(z, float):
        return _eval_rational_at_float(p, z)
    if ring.is_exact and isinstance(z, (float, complex)):
        if isinstance(z, float):
            value = evaluate(p, exact_from_float(z))
        else:
            value = evaluate(p, exact_from_complex(z))
        try:
            return to_float_scalar(value, complex_out=isinstance(z, complex))
        except FloatRangeError:
            if isinstance(z, complex):
                return complex(math.copysign(math.inf, value.re), math.copysign(math.inf, value.im))
            return math.copysign(math.inf, value)
    for target in _candidate_rings(ring, z):
        try:
            zz = coerce(z, target)
        except CoercionError:
            continue
        coeffs = p.coeffs if target is ring else [coerce(c, target) for c in p.coeffs]
        return _horner(coeffs, zz, target.zero())
    raise CoercionError(f"cannot evaluate a {ring.name} polynomial at {z!r}")


def substitute_scaled(p: Polynomial, a) -> Polynomial:
    """Return p(a*x); the ring widens to the complex extension when a needs it."""
    ring = p.ring
    for target in _candidate_rings(ring, a):
        try:
            aa = coerce(a, target)
        except CoercionError:
            continue
        out = []
        power = target.one()
        for c in p.coeffs:
            out.append(coerce(c, target) * power)
            power = power * aa
        return Polynomial._raw(out, target)
    raise CoercionError(f"cannot scale a {ring.name} polynomial by {a!r}")


def to_float(p: Polynomial) -> Polynomial:
    """Round coefficients into FLOAT64 / COMPLEX_FLOAT64; overflow raises FloatRangeError."""
    target = p.ring.float_counterpart
    out = []
    for k, c in enumerate(p.coeffs):
        try:
            out.append(to_float_scalar(c, complex_out=target is COMPLEX_FLOAT64))
        except FloatRangeError as exc:
            raise FloatRangeError(f"coefficient {k}: {exc}") from None
    return Polynomial._raw(out, target)


def x(ring: CoefficientRing = RATIONAL) -> Polynomial:
    """The identity polynomial."""
    return Polynomial.monomial(1, ring)
