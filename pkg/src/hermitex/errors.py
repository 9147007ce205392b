"""Exception hierarchy shared by every hermitex module."""


class HermitexError(Exception):
    """Base class for all errors raised by hermitex."""


class RingMismatchError(HermitexError, TypeError):
    """Two operands live over different coefficient rings."""


class CoercionError(HermitexError, TypeError):
    """A value cannot be represented in the requested coefficient ring."""


class FloatRangeError(HermitexError, OverflowError):
    """An exact value is too large to convert to a float."""


class MixedModeError(HermitexError, TypeError):
    """A float parameter was combined with an exact polynomial."""


class IndexCapError(HermitexError, ValueError):
    """A polynomial order is negative or above the configured cap."""


class InsufficientOrderError(HermitexError, ValueError):
    """A quadrature rule has too few nodes for the requested exactness."""


class QuadratureError(HermitexError, ArithmeticError):
    """Rule construction failed (bad node count or no eigen-convergence)."""


class ParameterError(HermitexError, ValueError):
    """A transform or operator parameter is outside its valid domain."""


class ImaginaryResidueError(HermitexError, ArithmeticError):
    """A quantity that must be real carries a nonzero imaginary part."""


class PolynomialParseError(HermitexError, ValueError):
    """Malformed polynomial text; ``token`` is the 1-based token position."""

    def __init__(self, message: str, token: int):
        super().__init__(message)
        self.token = token


class ConfigError(HermitexError, ValueError):
    """Invalid verification configuration."""
