from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from hermitex.polynomial import COMPLEX_RATIONAL, RATIONAL, Polynomial
from hermitex.rings import ComplexRational

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
nonzero_rationals = rationals.filter(lambda q: q != 0)
complex_rationals = st.builds(ComplexRational, rationals, rationals)


def rational_polys(max_degree=20):
    return st.lists(rationals, max_size=max_degree + 1).map(lambda cs: Polynomial(cs, RATIONAL))


def nonzero_rational_polys(max_degree=20):
    return st.builds(
        lambda cs, lead: Polynomial(cs + [lead], RATIONAL),
        st.lists(rationals, max_size=max_degree),
        nonzero_rationals,
    )


def complex_rational_polys(max_degree=10):
    return st.lists(complex_rationals, max_size=max_degree + 1).map(
        lambda cs: Polynomial(cs, COMPLEX_RATIONAL)
    )


def F(a, b=1):
    return Fraction(a, b)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[key])
