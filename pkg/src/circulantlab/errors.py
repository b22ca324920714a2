"""Exception types shared across the package."""


class InvalidDimensionError(ValueError):
    """Raised when a matrix or sequence dimension is out of range."""


class InvalidInputError(ValueError):
    """Raised when an operation receives structurally invalid input."""


class ResourceBudgetError(RuntimeError):
    """Raised when a dense materialization or enumeration would exceed its budget."""


class InvalidConfigError(ValueError):
    """Raised for unusable experiment configurations."""
