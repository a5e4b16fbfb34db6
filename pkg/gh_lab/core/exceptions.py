"""
Custom exceptions for GH Lab.

These exceptions provide clear, actionable error messages for various failure scenarios.
Each class carries the process exit code the CLI uses when it surfaces the error.
"""

from typing import Any, Dict, Optional


class GHLabError(Exception):
    """Base exception for all GH Lab errors."""

    exit_code: int = 2

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class ConfigurationError(GHLabError):
    """Raised when configuration is invalid or missing."""
    pass


class ValidationError(GHLabError):
    """Raised when an argument violates an operation's precondition."""
    pass


class DimensionMismatchError(ValidationError):
    """Raised when points or spaces of different dimensions are combined."""
    pass


class FileFormatError(ValidationError):
    """Raised when a point-set or distance-matrix file is malformed."""
    pass


class CoverageError(ValidationError):
    """Raised when a point is not covered by a net (net too sparse)."""
    pass


class FixedSimplexError(ValidationError):
    """Raised when the Z/2 action on a complex fixes a simplex (scale too large)."""
    pass


class BudgetExceededError(GHLabError):
    """Raised when an enumeration exceeds its configured size budget."""

    exit_code = 3


__all__ = [
    "GHLabError",
    "ConfigurationError",
    "ValidationError",
    "DimensionMismatchError",
    "FileFormatError",
    "CoverageError",
    "FixedSimplexError",
    "BudgetExceededError",
]
