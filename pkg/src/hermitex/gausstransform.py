"""The Gauss transform G^u, symbolically and by quadrature.

G^u_x[h(y)] = 1/sqrt(2 pi u) int exp(-(y - x)**2 / (2u)) h(y) dy = W(u/2) h(x),

so a Gauss transform of parameter u is the heat operator with c = u/2.  The
symbolic path applies W(u/2) exactly to polynomials (any sign of u).  The
numeric path substitutes y = x + sqrt(2u) t and sums a Gauss-Hermite rule,
which requires u > 0.

Numeric comparisons report the error

    |computed - expected| / max(1, |expected|, mass)

where ``mass`` is (1/sqrt(pi)) sum_i w_i |h(y_i)|, the scale against which a
quadrature sum can round.  For positive integrands mass ~ |expected| and this
is the usual relative error; for oscillatory integrands such as H_n it keeps
cancellation in the sum from masquerading as an identity failure.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .diffop import HeatOperator, Parameter, apply_heat_operator, as_parameter
from .errors import ParameterError
from .hermite import check_index, hermite_recurrence, modified_hermite
from .polynomial import Polynomial, evaluate, substitute_scaled
from .quadrature import GaussHermiteRule, build_rule, default_order

DEFAULT_X_GRID = (-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0)
DEFAULT_TOL = 1e-10
HALF = Fraction(1, 2)

_SQRT_PI = math.sqrt(math.pi)


class IdentityId(str, enum.Enum):
    HERMITE_TO_MONOMIAL = "HERMITE_TO_MONOMIAL"
    MONOMIAL_TO_MODIFIED_HERMITE = "MONOMIAL_TO_MODIFIED_HERMITE"
    OPERATOR_VS_INTEGRAL = "OPERATOR_VS_INTEGRAL"
    OPERATOR_DEFINITION = "OPERATOR_DEFINITION"
    INTEGRAL_REPRESENTATION = "INTEGRAL_REPRESENTATION"
    EGF = "EGF"
    TRANSFORMED_EGF = "TRANSFORMED_EGF"


class Mode(str, enum.Enum):
    EXACT = "EXACT"
    NUMERIC = "NUMERIC"


@dataclass(frozen=True)
class TransformIdentityResult:
    identity_id: IdentityId
    n: int
    mode: Mode
    max_error: float
    passed: bool
    tolerance: float

    def __post_init__(self):
        if self.mode is Mode.EXACT and self.passed and self.max_error != 0:
            raise ValueError("an EXACT pass must carry zero error")

    def as_dict(self) -> dict:
        return {
            "identity_id": self.identity_id.value,
            "n": self.n,
            "mode": self.mode.value,
            "max_error": self.max_error,
            "passed": self.passed,
            "tolerance": self.tolerance,
        }


@dataclass(frozen=True)
class GaussParameter:
    """Transform parameter u (the kernel variance)."""

    u: Parameter

    def __post_init__(self):
        object.__setattr__(self, "u", as_parameter(self.u))

    @classmethod
    def from_heat_operator(cls, op: HeatOperator) -> GaussParameter:
        return cls(2 * op.c)

    def heat_operator(self) -> HeatOperator:
        return HeatOperator(self.u / 2)


ParamLike = Union[GaussParameter, Fraction, int, float, str]


def _param(u: ParamLike) -> GaussParameter:
    return u if isinstance(u, GaussParameter) else GaussParameter(u)


def gauss_symbolic(p: Polynomial, u: ParamLike) -> Polynomial:
    """G^u[p] = W(u/2) p, exact over the rational rings."""
    return apply_heat_operator(_param(u).heat_operator(), p)


def _gauss_sum(h, u: ParamLike, x: float, rule: GaussHermiteRule | None):
    u = _param(u).u
    if u <= 0:
        raise ParameterError(
            f"non-positive transform parameter u={u}: numeric path undefined, use symbolic path"
        )
    if rule is None:
        if not isinstance(h, Polynomial):
            raise ParameterError("a quadrature rule is required for non-polynomial integrands")
        rule = build_rule(default_order(h.degree))
    scale = math.sqrt(2.0 * float(u))
    x = float(x)
    terms = [w * h(x + scale * t) for t, w in zip(rule.nodes, rule.weights)]
    mass = math.fsum(abs(v) for v in terms) / _SQRT_PI
    if any(isinstance(v, complex) for v in terms):
        terms = [complex(v) for v in terms]
        value = complex(
            math.fsum(v.real for v in terms), math.fsum(v.imag for v in terms)
        ) / _SQRT_PI
    else:
        value = math.fsum(terms) / _SQRT_PI
    return value, mass


def gauss_numeric(
    h: Callable[[float], float | complex] | Polynomial,
    u: ParamLike,
    x: float,
    rule: GaussHermiteRule | None = None,
) -> float | complex:
    """(1/sqrt(pi)) sum_i w_i h(x + sqrt(2u) t_i); exact to roundoff for polynomial h
    of degree <= 2m - 1.  ``rule`` defaults to the node policy when h is a Polynomial."""
    return _gauss_sum(h, u, x, rule)[0]


def numeric_error(computed, expected, mass: float = 0.0) -> float:
    return abs(computed - expected) / max(1.0, abs(expected), mass)


def exact_error(p: Polynomial, q: Polynomial) -> float:
    """0.0 iff p == q; otherwise the largest coefficient discrepancy."""
    if p == q:
        return 0.0
    if p.ring is not q.ring:
        return math.inf
    try:
        return max(abs(complex(c)) for c in (p - q).coeffs)
    except OverflowError:
        return math.inf


def _numeric_rows(identity, n, pairs, tol) -> TransformIdentityResult:
    err = max((numeric_error(v, e, m) for v, e, m in pairs), default=0.0)
    return TransformIdentityResult(identity, n, Mode.NUMERIC, err, err <= tol, tol)


def _exact_row(identity, n, lhs: Polynomial, rhs: Polynomial) -> TransformIdentityResult:
    err = exact_error(lhs, rhs)
    return TransformIdentityResult(identity, n, Mode.EXACT, err, err == 0.0, 0.0)


def verify_hermite_to_monomial(
    n: int,
    mode: Mode | str = Mode.EXACT,
    x_grid: Sequence[float] = DEFAULT_X_GRID,
    tol: float = DEFAULT_TOL,
    rule: GaussHermiteRule | None = None,
) -> TransformIdentityResult:
    """Check G^{1/2}[H_n](x) = (2x)**n."""
    check_index(n)
    mode = Mode(mode)
    h = hermite_recurrence(n)
    target = substitute_scaled(Polynomial.monomial(n), 2)
    if mode is Mode.EXACT:
        return _exact_row(IdentityId.HERMITE_TO_MONOMIAL, n, gauss_symbolic(h, HALF), target)
    rule = rule or build_rule(default_order(n))
    pairs = []
    for x in x_grid:
        v, mass = _gauss_sum(h, HALF, x, rule)
        pairs.append((v, evaluate(target, float(x)), mass))
    return _numeric_rows(IdentityId.HERMITE_TO_MONOMIAL, n, pairs, tol)


def verify_monomial_to_modified_hermite(
    n: int,
    mode: Mode | str = Mode.EXACT,
    x_grid: Sequence[float] = DEFAULT_X_GRID,
    tol: float = DEFAULT_TOL,
    rule: GaussHermiteRule | None = None,
) -> TransformIdentityResult:
    """Check G^{1/2}[y**n](x) = (2i)**-n H_n(ix)."""
    check_index(n)
    mode = Mode(mode)
    y_n = Polynomial.monomial(n)
    target = modified_hermite(n)
    if mode is Mode.EXACT:
        return _exact_row(
            IdentityId.MONOMIAL_TO_MODIFIED_HERMITE, n, gauss_symbolic(y_n, HALF), target
        )
    rule = rule or build_rule(default_order(n))
    pairs = []
    for x in x_grid:
        v, mass = _gauss_sum(y_n, HALF, x, rule)
        pairs.append((v, evaluate(target, float(x)), mass))
    return _numeric_rows(IdentityId.MONOMIAL_TO_MODIFIED_HERMITE, n, pairs, tol)


def verify_operator_vs_integral(
    p: Polynomial,
    c: Parameter | int | str,
    x_grid: Sequence[float] = DEFAULT_X_GRID,
    tol: float = DEFAULT_TOL,
    rule: GaussHermiteRule | None = None,
) -> TransformIdentityResult:
    """Compare exact W(c)p with the Gaussian-kernel integral of p (variance 2c) on x_grid."""
    op = HeatOperator(c)
    if op.c <= 0:
        raise ParameterError(
            f"c={op.c} <= 0: the kernel integral diverges on the real line; "
            "use hermite_integral_rep for the c = -1/4 case"
        )
    lhs = apply_heat_operator(op, p)
    u = GaussParameter.from_heat_operator(op)
    rule = rule or build_rule(default_order(p.degree))
    pairs = []
    for x in x_grid:
        v, mass = _gauss_sum(p, u, x, rule)
        pairs.append((v, evaluate(lhs, float(x)), mass))
    return _numeric_rows(IdentityId.OPERATOR_VS_INTEGRAL, p.degree, pairs, tol)
