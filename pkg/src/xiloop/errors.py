"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class ConvergenceError(ArithmeticError):
    """A series or quadrature failed to reach the requested tolerance."""
