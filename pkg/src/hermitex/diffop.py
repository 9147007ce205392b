"""The heat operator W(c) = exp(c d^2/dx^2) acting on polynomials.

On a polynomial of degree d the exponential series stops after
floor(d/2) + 1 terms, so the action is exact over the rational rings:

    W(c) p = sum_{k=0}^{floor(d/2)} c**k p^(2k) / k!
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import CoercionError, MixedModeError
from .polynomial import Polynomial, derivative

Parameter = Union[Fraction, float]


def as_parameter(c) -> Parameter:
    """Normalize an operator/transform parameter: ints, Fractions and rational strings
    become Fractions, floats stay floats."""
    if isinstance(c, bool):
        raise CoercionError(f"invalid parameter {c!r}")
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if isinstance(c, float):
        return c
    if isinstance(c, str):
        try:
            return Fraction(c.replace("−", "-").strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise CoercionError(f"not a rational parameter: {c!r}") from exc
    raise CoercionError(f"invalid parameter {c!r}")


@dataclass(frozen=True)
class HeatOperator:
    """W(c) = exp(c * d^2/dx^2).  Any sign of c is allowed on polynomials."""

    c: Parameter

    def __post_init__(self):
        object.__setattr__(self, "c", as_parameter(self.c))

    @property
    def is_exact(self) -> bool:
        return isinstance(self.c, Fraction)

    def __call__(self, p: Polynomial) -> Polynomial:
        return apply_heat_operator(self, p)

    def __matmul__(self, other: HeatOperator) -> HeatOperator:
        return compose(self, other)


def _check_mode(op: HeatOperator, p: Polynomial) -> None:
    if not op.is_exact and p.ring.is_exact:
        raise MixedModeError(
            f"float parameter c={op.c!r} on an exact {p.ring.name} polynomial; "
            "use a rational c or convert the polynomial with to_float"
        )


def heat_series_terms(op: HeatOperator, p: Polynomial) -> Iterator[Polynomial]:
    """Yield the nonzero-index terms c**k p^(2k) / k!, k = 0 .. floor(deg p / 2)."""
    _check_mode(op, p)
    term = p
    yield term
    for k in range(1, p.degree // 2 + 1):
        term = derivative(term, 2).scale(op.c) / k
        yield term


def apply_heat_operator(op: HeatOperator, p: Polynomial) -> Polynomial:
    """Apply W(c) to p via its terminating series."""
    acc = Polynomial.zero(p.ring)
    for term in heat_series_terms(op, p):
        acc = acc + term
    return acc


def compose(a: HeatOperator, b: HeatOperator) -> HeatOperator:
    """W(a.c) W(b.c) = W(a.c + b.c)."""
    return HeatOperator(a.c + b.c)


def invert(op: HeatOperator) -> HeatOperator:
    """W(c)^-1 = W(-c) on polynomials."""
    return HeatOperator(-op.c)
