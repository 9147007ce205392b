"""Exponential generating functions and their termwise Gauss transforms.

sum_n H_n(x) t**n / n! = exp(2xt - t**2), and applying G^{1/2} term by term
(G^{1/2}[H_n] = (2x)**n) gives sum_n (2x)**n t**n / n! = exp(2xt).

Each series is registered as a :class:`SeriesPair`: a map n -> polynomial
coefficient of t**n / n! together with the closed form it should sum to.
New pairs can be added to ``REGISTRY`` without touching the summation code.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Union

from .errors import ParameterError
from .gausstransform import HALF, gauss_symbolic
from .hermite import check_index, hermite_recurrence
from .polynomial import Polynomial, evaluate

DEFAULT_T_BOUND = 2.0

Number = Union[float, complex]


@dataclass(frozen=True)
class SeriesTruncation:
    """Partial sum through order N of a series in t, evaluated at x."""

    N: int
    t: Number
    x: float
    t_bound: float = DEFAULT_T_BOUND

    def __post_init__(self):
        if isinstance(self.N, bool) or not isinstance(self.N, int) or self.N < 1:
            raise ParameterError(f"truncation order must be a positive integer, got {self.N!r}")
        check_index(self.N)
        if abs(self.t) > self.t_bound:
            raise ParameterError(f"|t| = {abs(self.t)} exceeds the configured bound {self.t_bound}")
        if not math.isfinite(float(self.x)):
            raise ParameterError(f"x must be finite, got {self.x!r}")


@dataclass(frozen=True)
class SeriesPair:
    name: str
    term: Callable[[int], Polynomial]
    closed_form: Callable[[float, Number], Number]


@dataclass(frozen=True)
class EgfResidual:
    egf: float
    transformed_egf: float


def _cexp(z):
    return cmath.exp(z) if isinstance(z, complex) else math.exp(z)


REGISTRY: dict[str, SeriesPair] = {}


def register(pair: SeriesPair) -> SeriesPair:
    REGISTRY[pair.name] = pair
    return pair


HERMITE_EGF = register(
    SeriesPair("hermite", hermite_recurrence, lambda x, t: _cexp(2 * x * t - t * t))
)


@lru_cache(maxsize=None)
def _transformed_hermite(n: int) -> Polynomial:
    return gauss_symbolic(hermite_recurrence(n), HALF)


TRANSFORMED_HERMITE_EGF = register(
    SeriesPair("transformed_hermite", _transformed_hermite, lambda x, t: _cexp(2 * x * t))
)


def _fsum(values):
    if any(isinstance(v, complex) for v in values):
        return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))
    return math.fsum(values)


def partial_sum(pair: SeriesPair, trunc: SeriesTruncation) -> Number:
    """sum_{n=0}^{N} pair.term(n)(x) t**n / n!, exactly rounded via fsum.

    t**n / n! is built incrementally so neither factor overflows.
    """
    x = float(trunc.x)
    t = trunc.t
    factor = 1.0
    terms = []
    for n in range(trunc.N + 1):
        if n:
            factor = factor * t / n
        terms.append(evaluate(pair.term(n), x) * factor)
    return _fsum(terms)


def egf_partial(trunc: SeriesTruncation) -> Number:
    return partial_sum(HERMITE_EGF, trunc)


def transformed_egf_partial(trunc: SeriesTruncation) -> Number:
    return partial_sum(TRANSFORMED_HERMITE_EGF, trunc)


def transformed_term(n: int) -> Polynomial:
    """Exact coefficient of t**n in the transformed series: G^{1/2}[H_n] / n!."""
    check_index(n)
    return TRANSFORMED_HERMITE_EGF.term(n) / math.factorial(n)


def residual(pair: SeriesPair, trunc: SeriesTruncation) -> float:
    return abs(partial_sum(pair, trunc) - pair.closed_form(float(trunc.x), trunc.t))


def egf_residual(trunc: SeriesTruncation) -> EgfResidual:
    return EgfResidual(residual(HERMITE_EGF, trunc), residual(TRANSFORMED_HERMITE_EGF, trunc))


__all__ = [
    "EgfResidual",
    "HERMITE_EGF",
    "REGISTRY",
    "SeriesPair",
    "SeriesTruncation",
    "TRANSFORMED_HERMITE_EGF",
    "egf_partial",
    "egf_residual",
    "partial_sum",
    "register",
    "residual",
    "transformed_egf_partial",
    "transformed_term",
]
