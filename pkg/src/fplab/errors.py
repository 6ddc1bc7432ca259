"""Typed errors shared across the package.

Budget violations are errors, never silent truncation: truncating a product
would break associativity of the ambient semigroup.
"""

from __future__ import annotations


class FplabError(Exception):
    """Base class for all package errors."""


class BudgetExceededError(FplabError):
    """A product or morphism application left the instance's carrier budget."""

    def __init__(self, message: str, *, element=None, context=None):
        super().__init__(message)
        self.element = element
        self.context = context


class ConfigError(FplabError):
    """Bad job configuration (schema violation, unknown name, empty pool)."""


class PreconditionError(FplabError):
    """A documented operation precondition does not hold for the arguments."""
