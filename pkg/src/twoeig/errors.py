"""Exception types shared across the package."""


class CapacityError(ValueError):
    """Raised when an operation would exceed the supported vertex count."""


class ContractViolation(ValueError):
    """Raised when an input violates an operation's precondition."""


class ConsistencyError(RuntimeError):
    """An exact computation contradicts a proven structural fact.

    This always indicates a bug in this package (or corrupted input data),
    never a property of the graph being examined.
    """
