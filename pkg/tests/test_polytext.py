import pytest
from hypothesis import given

from hermitex.errors import PolynomialParseError
from hermitex.polynomial import COMPLEX_FLOAT64, COMPLEX_RATIONAL, FLOAT64, RATIONAL, Polynomial
from hermitex.polytext import format_polynomial, infer_ring, parse_polynomial
from hermitex.rings import ComplexRational

from conftest import F, complex_rational_polys, rational_polys


def test_hermite_two_with_unicode_minus():
    assert parse_polynomial("−2, 0, 4") == Polynomial([-2, 0, 4])


def test_constant_fraction():
    assert parse_polynomial("1/2") == Polynomial([F(1, 2)])


def test_zero_denominator_reports_position():
    with pytest.raises(PolynomialParseError, match="zero denominator at token 1") as info:
        parse_polynomial("1/0")
    assert info.value.token == 1


@pytest.mark.parametrize("text,pos", [("1, x", 2), ("1,,2", 2), ("3, 4, 1/2/3", 3), ("1.5", 1)])
def test_malformed_tokens(text, pos):
    with pytest.raises(PolynomialParseError) as info:
        parse_polynomial(text, RATIONAL)
    assert info.value.token == pos


def test_complex_rational_tokens():
    p = parse_polynomial("1/2+3/4i, -i, 2i", COMPLEX_RATIONAL)
    assert p.coeffs == (ComplexRational(F(1, 2), F(3, 4)), ComplexRational(0, -1), ComplexRational(0, 2))


def test_float_rings():
    assert parse_polynomial("1.5, -2e3", FLOAT64).coeffs == (1.5, -2000.0)
    assert parse_polynomial("1+2i, -3.5j", COMPLEX_FLOAT64).coeffs == (1 + 2j, -3.5j)


def test_zero_forms():
    assert parse_polynomial("").is_zero()
    assert parse_polynomial("0, 0").is_zero()
    assert format_polynomial(Polynomial([])) == "0"


@pytest.mark.parametrize(
    "text,ring",
    [("1, 2", RATIONAL), ("1/2, 1i", COMPLEX_RATIONAL), ("0.5", FLOAT64), ("1e3, 2j", COMPLEX_FLOAT64)],
)
def test_infer_ring(text, ring):
    assert infer_ring(text) is ring


@given(rational_polys(max_degree=30))
def test_round_trip_rational(p):
    assert parse_polynomial(format_polynomial(p), RATIONAL) == p


@given(complex_rational_polys())
def test_round_trip_complex_rational(p):
    assert parse_polynomial(format_polynomial(p), COMPLEX_RATIONAL) == p


def test_round_trip_floats():
    p = Polynomial([0.1, -1e-300, 3.141592653589793, 2.0 ** 70], FLOAT64)
    assert parse_polynomial(format_polynomial(p), FLOAT64) == p
