"""Exception and warning types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where an evaluator is defined."""


class RangeError(ValueError):
    """A size parameter (node count, truncation order) is out of range."""


class IntegrationError(ArithmeticError):
    """A quadrature integrand produced non-finite values."""


class AccuracyWarning(UserWarning):
    """Inputs fall outside the envelope where the stated accuracy holds."""
