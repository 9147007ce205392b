"""Gauss-Hermite quadrature for the weight exp(-t**2).

Rules are built from scratch.  Nodes are the eigenvalues of the symmetric
tridiagonal Jacobi matrix (zero diagonal, off-diagonals sqrt(k/2)), found
with an implicit-shift QL sweep and then polished by Newton steps on the
orthonormal Hermite function psi_m.  Weights use the closed form of the
squared first eigenvector component,

    w_i = sqrt(pi) * v_0(t_i)**2 = exp(-t_i**2) / sum_{k<m} psi_k(t_i)**2,

which keeps full relative accuracy on the tiny outer weights (the rotated
eigenvectors of a QL sweep only carry absolute accuracy).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import InsufficientOrderError, QuadratureError

MAX_NODES = 500
_MAX_QL_ITERATIONS = 60
_NEWTON_STEPS = 4


@dataclass(frozen=True)
class GaussHermiteRule:
    """An m-point rule integrating exactly against exp(-t**2) up to degree 2m-1.

    Nodes are ascending and exactly antisymmetric; weights are symmetric.
    No 1/sqrt(pi) factor is folded into the weights.
    """

    m: int
    nodes: tuple[float, ...]
    weights: tuple[float, ...]

    @property
    def exact_degree(self) -> int:
        return 2 * self.m - 1

    def require_exact(self, degree: int) -> None:
        if degree > self.exact_degree:
            raise InsufficientOrderError(
                f"{self.m}-node rule is exact only to degree {self.exact_degree}, "
                f"need degree {degree}"
            )

    def pairs(self) -> list[tuple[float, float]]:
        return list(zip(self.nodes, self.weights))


def default_order(degree: int) -> int:
    """Node count policy for a polynomial integrand of the given degree.

    ceil((d+1)/2) nodes suffice in exact arithmetic; two more absorb roundoff.
    """
    if degree < 0:
        degree = 0
    return -(-(degree + 1) // 2) + 2


def _tridiagonal_eigenvalues(diag: list[float], off: list[float]) -> list[float]:
    # QL with implicit Wilkinson shifts; off[i] couples rows i and i+1.
    n = len(diag)
    d = list(diag)
    e = list(off) + [0.0]
    for l in range(n):
        iterations = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= 2.0 ** -53 * dd:
                    break
                m += 1
            if m == l:
                break
            iterations += 1
            if iterations > _MAX_QL_ITERATIONS:
                raise QuadratureError(
                    f"QL iteration did not converge for eigenvalue {l} of {n}"
                )
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return sorted(d)


def hermite_functions(m: int, t: float) -> list[float]:
    """Orthonormal Hermite functions psi_0..psi_m at t.

    psi_k(t) = p_k(t) exp(-t**2/2) with p_k orthonormal for weight exp(-t**2).
    """
    psi = [math.pi ** -0.25 * math.exp(-0.5 * t * t)]
    if m >= 1:
        psi.append(math.sqrt(2.0) * t * psi[0])
    for k in range(1, m):
        psi.append(
            math.sqrt(2.0 / (k + 1)) * t * psi[k] - math.sqrt(k / (k + 1)) * psi[k - 1]
        )
    return psi


def _polish(m: int, t: float) -> float:
    for _ in range(_NEWTON_STEPS):
        psi = hermite_functions(m, t)
        # psi_m' = sqrt(2m) psi_{m-1} - t psi_m
        slope = math.sqrt(2.0 * m) * psi[m - 1] - t * psi[m]
        if slope == 0.0:
            break
        step = psi[m] / slope
        t -= step
        if abs(step) <= 2.0 ** -52 * max(1.0, abs(t)):
            break
    return t


def _weight(m: int, t: float) -> float:
    psi = hermite_functions(m - 1, t)
    return math.exp(-t * t) / math.fsum(p * p for p in psi)


def build_rule(m: int) -> GaussHermiteRule:
    """Build the m-node Gauss-Hermite rule, 1 <= m <= 500.

    For m >= 389 the outermost weights underflow float64 and come back as
    0.0; from about m = 360 they are subnormal with reduced precision.
    """
    if isinstance(m, bool) or not isinstance(m, int) or not 1 <= m <= MAX_NODES:
        raise QuadratureError(f"node count must be an integer in [1, {MAX_NODES}], got {m!r}")
    off = [math.sqrt(k / 2.0) for k in range(1, m)]
    eig = _tridiagonal_eigenvalues([0.0] * m, off)

    half = m // 2
    positive = []
    for i in range(half):
        # eigenvalues of a zero-diagonal Jacobi matrix come in +/- pairs
        t = 0.5 * (eig[m - 1 - i] - eig[i])
        positive.append(_polish(m, t))
    positive.reverse()  # ascending

    nodes = [-t for t in reversed(positive)]
    if m % 2:
        nodes.append(0.0)
    nodes.extend(positive)

    pos_weights = [_weight(m, t) for t in positive]
    weights = list(reversed(pos_weights))
    if m % 2:
        weights.append(_weight(m, 0.0))
    weights.extend(pos_weights)

    if any(not math.isfinite(w) or w < 0.0 for w in weights):  # pragma: no cover
        raise QuadratureError(f"non-finite or negative weight in {m}-node rule")
    return GaussHermiteRule(m=m, nodes=tuple(nodes), weights=tuple(weights))


def integrate(f: Callable[[float], float | complex], rule: GaussHermiteRule) -> float | complex:
    """Return sum_i w_i f(t_i), i.e. the rule's estimate of int f(t) exp(-t**2) dt.

    Terms are accumulated with math.fsum (real and imaginary parts separately),
    so exactly cancelling terms from symmetric nodes cancel exactly.
    """
    terms = [w * f(t) for t, w in zip(rule.nodes, rule.weights)]
    if any(isinstance(v, complex) for v in terms):
        terms = [complex(v) for v in terms]
        return complex(math.fsum(v.real for v in terms), math.fsum(v.imag for v in terms))
    return math.fsum(terms)


def gaussian_moment(j: int) -> float:
    """Closed form of int t**j exp(-t**2) dt: sqrt(pi) (j-1)!!/2**(j/2) for even j, 0 otherwise."""
    if j < 0:
        raise ValueError("moment order must be nonnegative")
    if j % 2:
        return 0.0
    k = j // 2
    # (2k-1)!! / 2**k = (2k)! / (4**k k!)
    return math.sqrt(math.pi) * (math.factorial(2 * k) / (4 ** k * math.factorial(k)))
