"""Heat operator, Gauss transform and Hermite polynomial identities, exact and numeric."""

__version__ = "0.1.0"

from .diffop import HeatOperator, apply_heat_operator, compose, invert  # noqa: E402
from .gausstransform import (  # noqa: E402
    GaussParameter,
    IdentityId,
    Mode,
    TransformIdentityResult,
    gauss_numeric,
    gauss_symbolic,
    verify_hermite_to_monomial,
    verify_monomial_to_modified_hermite,
    verify_operator_vs_integral,
)
from .genfunc import (  # noqa: E402
    SeriesTruncation,
    egf_partial,
    egf_residual,
    transformed_egf_partial,
)
from .hermite import (  # noqa: E402
    hermite_integral_rep,
    hermite_recurrence,
    hermite_via_operator,
    modified_hermite,
)
from .polynomial import (  # noqa: E402
    Polynomial,
    add,
    derivative,
    evaluate,
    mul,
    substitute_scaled,
    to_float,
)
from .polytext import format_polynomial, parse_polynomial  # noqa: E402
from .quadrature import GaussHermiteRule, build_rule, integrate  # noqa: E402
from .rings import CoefficientRing, ComplexRational, I  # noqa: E402
