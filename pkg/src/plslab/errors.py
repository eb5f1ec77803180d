"""Exception types shared across the package."""


class PlsLabError(Exception):
    """Base class for all errors raised by plslab."""


class DimensionError(PlsLabError, ValueError):
    """A vector or index does not match the instance it is used with."""


class InvalidMatrixError(PlsLabError, ValueError):
    """A point matrix breaks column alignment, so distances are not rational."""


class ValidationError(PlsLabError, ValueError):
    """An instance or path violates the preconditions of an operation."""


class InfeasibleMoveError(PlsLabError, ValueError):
    """A requested flip would leave the feasible region."""


class UndefinedObjectiveError(PlsLabError, ZeroDivisionError):
    """The objective is undefined for this solution (e.g. an empty cut side)."""


class CapExceededError(PlsLabError, RuntimeError):
    """Exhaustive enumeration would exceed the configured solution cap."""
