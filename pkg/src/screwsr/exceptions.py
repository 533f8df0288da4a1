"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


class FieldMismatchError(ValueError):
    """Operands live over different scalar fields."""


class DomainError(ValueError):
    """A structural precondition on the inputs is violated."""


class CapacityError(ValueError):
    """Input exceeds the supported size limit."""


class NumericError(RuntimeError):
    """An iterative numerical routine failed to converge."""


class SingularityError(ValueError):
    """A partial operation was evaluated outside its domain."""
