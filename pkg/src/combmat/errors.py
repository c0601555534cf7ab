"""Exception types shared across the package."""

from fractions import Fraction


class ShapeError(ValueError):
    """Operands have incompatible or invalid dimensions."""


class ParseError(ValueError):
    """A rational or matrix source text is malformed."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SingularMatrixError(ArithmeticError):
    """A matrix required to be invertible has determinant zero."""

    def __init__(self, message: str = "singular matrix"):
        super().__init__(message)
        self.det = Fraction(0)


class DeflationError(ArithmeticError):
    """Division by (x - 1) was requested but 1 is not a root.

    Carries the nonzero value of the polynomial at 1 in ``value``.
    """

    def __init__(self, value: Fraction):
        super().__init__(f"polynomial does not vanish at 1 (value is {value})")
        self.value = value


class SamplingError(RuntimeError):
    """A rejection sampler exhausted its iteration budget."""


class UnknownSuiteError(ValueError):
    """The requested property suite is not registered."""

    def __init__(self, name: str, known: tuple[str, ...]):
        super().__init__(
            f"unknown suite {name!r}; registered suites: {', '.join(known)}"
        )
        self.known = known
