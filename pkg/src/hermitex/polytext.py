"""Text exchange format for polynomials.

Ascending, comma-separated coefficients.  Rationals are written ``a`` or
``a/b``; complex rationals ``a/b+c/di``.  Float rings use decimal floats and
``x+yi`` for complex values.  The empty string and ``0`` both denote the
zero polynomial.  A Unicode minus sign is accepted wherever ``-`` is.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import PolynomialParseError
from .polynomial import COMPLEX_FLOAT64, COMPLEX_RATIONAL, FLOAT64, RATIONAL, Polynomial
from .rings import CoefficientRing, ComplexRational

_RAT = r"[+-]?\d+(?:/[+-]?\d+)?"
_FLT = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?|[+-]?(?:inf|nan)"
_RAT_RE = re.compile(rf"^({_RAT})$")
_FLT_RE = re.compile(rf"^({_FLT})$")
_CRAT_RE = re.compile(rf"^(?:({_RAT})(?=[+-]))?([+-]?(?:\d+(?:/[+-]?\d+)?)?)i$")
_CFLT_RE = re.compile(rf"^(?:({_FLT})(?=[+-]))?([+-]?(?:(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?)[ij]$")


def _normalize(text: str) -> str:
    return text.replace("−", "-").replace(" ", "").replace("\t", "")


def _rational(tok: str, pos: int) -> Fraction:
    num, _, den = tok.partition("/")
    if den and int(den) == 0:
        raise PolynomialParseError(f"zero denominator at token {pos}", pos)
    return Fraction(int(num), int(den)) if den else Fraction(int(num))


def _imag_unit(tok: str) -> str:
    # "i", "+i", "-i" stand for +-1i
    return tok + "1" if tok in ("", "+", "-") else tok


def _parse_token(tok: str, ring: CoefficientRing, pos: int):
    if not tok:
        raise PolynomialParseError(f"empty token at token {pos}", pos)
    if ring is RATIONAL:
        if _RAT_RE.match(tok):
            return _rational(tok, pos)
    elif ring is COMPLEX_RATIONAL:
        if _RAT_RE.match(tok):
            return ComplexRational(_rational(tok, pos))
        m = _CRAT_RE.match(tok)
        if m:
            re_part = _rational(m.group(1), pos) if m.group(1) else Fraction(0)
            return ComplexRational(re_part, _rational(_imag_unit(m.group(2)), pos))
    elif ring is FLOAT64:
        if _FLT_RE.match(tok) or _RAT_RE.match(tok):
            return float(_rational(tok, pos)) if "/" in tok else float(tok)
    elif ring is COMPLEX_FLOAT64:
        if _FLT_RE.match(tok):
            return complex(float(tok))
        m = _CFLT_RE.match(tok)
        if m:
            re_part = float(m.group(1)) if m.group(1) else 0.0
            return complex(re_part, float(_imag_unit(m.group(2))))
    raise PolynomialParseError(f"malformed token {tok!r} at token {pos}", pos)


def parse_polynomial(text: str, ring: CoefficientRing = RATIONAL) -> Polynomial:
    """Parse the coefficient text format into a normalized Polynomial.

    Errors carry the 1-based position of the offending token.
    """
    body = _normalize(text)
    if body == "":
        return Polynomial.zero(ring)
    coeffs = [_parse_token(tok, ring, k) for k, tok in enumerate(body.split(","), start=1)]
    return Polynomial(coeffs, ring)


def infer_ring(text: str) -> CoefficientRing:
    """Guess the ring of a coefficient text: floats if any '.', 'e' or 'inf'; complex if any 'i'/'j'."""
    body = _normalize(text).lower()
    floaty = bool(re.search(r"[.e]|inf|nan", body))
    complexy = bool(re.search(r"[ij]", body.replace("inf", "")))
    if floaty:
        return COMPLEX_FLOAT64 if complexy else FLOAT64
    return COMPLEX_RATIONAL if complexy else RATIONAL


def format_scalar(c) -> str:
    if isinstance(c, ComplexRational):
        sign = "-" if c.im < 0 else "+"
        return f"{c.re}{sign}{abs(c.im)}i"
    if isinstance(c, complex):
        sign = "-" if c.imag < 0 or (c.imag == 0 and str(c.imag).startswith("-")) else "+"
        return f"{c.real!r}{sign}{abs(c.imag)!r}i"
    if isinstance(c, float):
        return repr(c)
    return str(c)


def format_polynomial(p: Polynomial) -> str:
    """Inverse of :func:`parse_polynomial` for the polynomial's own ring."""
    if p.is_zero():
        return "0"
    return ", ".join(format_scalar(c) for c in p.coeffs)
