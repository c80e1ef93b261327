"""Exception types raised by the library."""


class AbelCoverError(Exception):
    """Base class for all library errors."""


class InvalidModulusError(AbelCoverError, ValueError):
    pass


class SizeCapError(AbelCoverError, RuntimeError):
    """A subgroup closure grew past the configured size cap."""

    def __init__(self, cap, reached):
        self.cap = cap
        self.reached = reached
        super().__init__(
            f"subgroup closure exceeded cap of {cap} elements "
            f"(reached {reached} before stopping)"
        )


class ValidationError(AbelCoverError, ValueError):
    """The presentation matrix violates the zero row-sum condition."""

    def __init__(self, message, row=None):
        self.row = row
        super().__init__(message)


class EmptyMatrixError(ValidationError):
    pass


class DomainError(AbelCoverError, ValueError):
    pass


class EligibilityError(DomainError):
    """Raised for eigenspace data that only exists when t(r) = t(-r) = 2."""


class ParameterError(AbelCoverError, ValueError):
    pass


class NonConvergenceError(AbelCoverError, ArithmeticError):
    pass


class LogarithmicCase(AbelCoverError):
    """Signals c == 1, where the second local solution needs a logarithm."""


class SampleFailure(AbelCoverError, ArithmeticError):
    """A numerical check hit a sample where it cannot be evaluated."""
