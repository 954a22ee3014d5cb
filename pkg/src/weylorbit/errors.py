"""Exception types raised across the package."""


class UnsupportedAlgebra(ValueError):
    pass


class SignUndefined(ValueError):
    """A short/long sign homomorphism was requested on a simply-laced algebra."""


class DomainError(ValueError):
    """A point or label lies outside the domain an operation requires."""


class NoClosedForm(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class GridMismatch(ValueError):
    """Sample or spectrum data does not line up with the regenerated grid."""
