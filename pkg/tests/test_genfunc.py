import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermitex.errors import IndexCapError, ParameterError
from hermitex.genfunc import (
    REGISTRY,
    SeriesPair,
    SeriesTruncation,
    egf_partial,
    egf_residual,
    partial_sum,
    register,
    residual,
    transformed_egf_partial,
    transformed_term,
)
from hermitex.polynomial import Polynomial, substitute_scaled

T = SeriesTruncation


def test_t_zero():
    for x in (-1.5, 0.0, 2.0):
        for N in (1, 7, 40):
            assert egf_partial(T(N, 0.0, x)) == 1.0
            assert transformed_egf_partial(T(N, 0.0, x)) == 1.0
            r = egf_residual(T(N, 0.0, x))
            assert r.egf == 0.0 and r.transformed_egf == 0.0


def test_closed_forms():
    assert abs(egf_partial(T(40, 1.0, 0.0)) - math.exp(-1)) <= 1e-12
    assert abs(egf_partial(T(40, 0.5, 1.0)) - math.exp(0.75)) <= 1e-12
    assert abs(transformed_egf_partial(T(40, 1.0, 1.0)) - math.exp(2)) <= 1e-10
    assert abs(transformed_egf_partial(T(40, 0.8, -0.5)) - math.exp(-0.8)) <= 1e-10


def test_residual_decreases():
    lo, hi = egf_residual(T(10, 1.0, 1.0)), egf_residual(T(40, 1.0, 1.0))
    assert hi.egf < lo.egf and hi.transformed_egf < lo.transformed_egf


def test_large_argument_residuals():
    r = egf_residual(T(60, 1.5, 2.0))
    assert r.egf <= 1e-8 and r.transformed_egf <= 1e-8


@pytest.mark.parametrize("n", range(31))
def test_termwise_transform_is_scaled_monomial(n):
    assert transformed_term(n) == substitute_scaled(Polynomial.monomial(n), 2) / math.factorial(n)


@pytest.mark.parametrize("x", [-2.0, -0.5, 1.0, 2.0])
@pytest.mark.parametrize("t", [-1.0, -0.3, 0.6, 1.0])
def test_monotone_decay(x, t):
    res = [egf_residual(T(N, t, x)) for N in (10, 20, 40)]
    for a, b in zip(res, res[1:]):
        assert b.egf <= a.egf and b.transformed_egf <= a.transformed_egf


@given(st.floats(-2, 2), st.floats(-2, 2))
def test_symmetry(x, t):
    assert abs(egf_partial(T(30, t, x)) - egf_partial(T(30, -t, -x))) <= 1e-12 * max(1.0, math.exp(2 * x * t))


def test_complex_t():
    val = egf_partial(T(40, 0.5j, 1.0))
    assert val == pytest.approx(complex(math.e ** 0.25 * math.cos(1), math.e ** 0.25 * math.sin(1)), rel=1e-13)


def test_truncation_validation(monkeypatch):
    with pytest.raises(ParameterError):
        T(0, 0.5, 0.0)
    with pytest.raises(ParameterError):
        T(10, 2.5, 0.0)
    assert T(10, 2.5, 0.0, t_bound=3.0).t == 2.5
    monkeypatch.setenv("HERMITEX_CAP", "20")
    with pytest.raises(IndexCapError):
        T(21, 0.5, 0.0)


def test_register_new_pair():
    # monomials y^n: sum y^n t^n / n! = exp(xt)
    pair = SeriesPair("monomial_test", Polynomial.monomial, lambda x, t: math.exp(x * t))
    register(pair)
    try:
        assert REGISTRY["monomial_test"] is pair
        assert residual(pair, T(40, 0.7, 1.3)) <= 1e-14
        assert partial_sum(pair, T(1, 0.5, 2.0)) == 2.0
    finally:
        del REGISTRY["monomial_test"]
