"""Exception types shared across the package."""


class EdgeboundsError(Exception):
    """Base class for all package-specific errors."""


class DomainError(EdgeboundsError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ResourceBudgetError(EdgeboundsError, RuntimeError):
    """A requested computation exceeds the configured memory/time budget."""
