"""Physicists' Hermite polynomials, built three independent ways.

* ``hermite_recurrence``: H_{k+1} = 2x H_k - 2k H_{k-1}.
* ``hermite_via_operator``: H_n = 2**n W(-1/4) x**n.
* ``hermite_integral_rep``: H_n(x) = 2**n/sqrt(pi) * int (x + i t)**n exp(-t**2) dt,
  evaluated by Gauss-Hermite quadrature.
"""
from __future__ import annotations

import math
import os
from fractions import Fraction
from functools import lru_cache

from .diffop import HeatOperator, apply_heat_operator
from .errors import ImaginaryResidueError, IndexCapError
from .polynomial import Polynomial, substitute_scaled
from .quadrature import GaussHermiteRule, build_rule, default_order, integrate
from .rings import ComplexRational, I

DEFAULT_CAP = 200
IMAG_RESIDUE_TOL = 1e-10

def order_cap() -> int:
    """Largest admissible order; HERMITEX_CAP overrides the default of 200."""
    raw = os.environ.get("HERMITEX_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise IndexCapError(f"HERMITEX_CAP must be a nonnegative integer, got {raw!r}") from None
    if cap < 0:
        raise IndexCapError(f"HERMITEX_CAP must be a nonnegative integer, got {raw!r}")
    return cap

def check_index(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise IndexCapError(f"order must be an integer, got {n!r}")
    if n < 0:
        raise IndexCapError(f"order must be nonnegative, got {n}")
    cap = order_cap()
    if n > cap:
        raise IndexCapError(f"order {n} exceeds cap {cap} (set HERMITEX_CAP to raise it)")
    return n

@lru_cache(maxsize=None)
def _recurrence_table(n: int) -> tuple[Polynomial, ...]:
    # Results depend only on n, so caching is invisible to callers.
    x2 = Polynomial([0, 2])
    table = [Polynomial([1]), x2]
    for k in range(1, n):
        table.append(x2 * table[k] - table[k - 1].scale(2 * k))
    return tuple(table[: n + 1])

def hermite_recurrence(n: int) -> Polynomial:
    """H_n from the three-term recurrence (exact, integer coefficients)."""
    check_index(n)
    return _recurrence_table(max(n, 1))[n]

def hermite_via_operator(n: int) -> Polynomial:
    """H_n as 2**n exp(-d^2/4) x**n."""
    check_index(n)
    w = HeatOperator(Fraction(-1, 4))
    return apply_heat_operator(w, Polynomial.monomial(n)).scale(2 ** n)

def hermite_integral_value(n: int, x: float, rule: GaussHermiteRule | None = None) -> complex:
    """Raw complex quadrature value of 2**n/sqrt(pi) * sum_i w_i (x + i t_i)**n."""
    check_index(n)
    if rule is None:
        rule = build_rule(default_order(n))
    rule.require_exact(n)
    x = float(x)
    s = integrate(lambda t: complex(x, t) ** n, rule)
    return complex(s) * (2.0 ** n / math.sqrt(math.pi))

def hermite_integral_rep(n: int, x: float, rule: GaussHermiteRule | None = None) -> float:
    """H_n(x) from the contour-shifted Gaussian integral, by quadrature.

    Needs 2m - 1 >= n.  The imaginary part of the quadrature sum must vanish
    to within 1e-10 * max(1, |H_n(x)|); otherwise ImaginaryResidueError.
    """
    z = hermite_integral_value(n, x, rule)
    if abs(z.imag) > IMAG_RESIDUE_TOL * max(1.0, abs(z.real)):
        raise ImaginaryResidueError(
            f"imaginary residue {z.imag:.3e} for n={n}, x={x} exceeds tolerance"
        )
    return z.real

def modified_hermite(n: int) -> Polynomial:
    """(2i)**-n H_n(ix), certified real and returned over the rationals."""
    check_index(n)
    h_ix = substitute_scaled(hermite_recurrence(n), I)
    scaled = h_ix.scale(ComplexRational(0, 2) ** (-n))
    if not scaled.imag_part().is_zero():
        raise ImaginaryResidueError(f"modified Hermite polynomial of order {n} is not real")
    return scaled.real_part()

def hermite_table(nmax: int) -> list[Polynomial]:
    """[H_0, ..., H_nmax] from the recurrence."""
    check_index(nmax)
    return list(_recurrence_table(max(nmax, 1))[: nmax + 1])

__all__ = [
    "DEFAULT_CAP",
    "check_index",
    "hermite_integral_rep",
    "hermite_integral_value",
    "hermite_recurrence",
    "hermite_table",
    "hermite_via_operator",
    "modified_hermite",
    "order_cap",
]
