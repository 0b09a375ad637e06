"""Exceptions shared across the package."""

from __future__ import annotations


class BudgetExceededError(RuntimeError):
    """A computation was refused because it exceeds the configured desk-scale cap."""


class ConsistencyError(RuntimeError):
    """An internal identity that must hold (integrality, divisibility) failed.

    Raised instead of silently rounding: every such identity is a theorem,
    so a failure signals a bug or a wrong counting convention.
    """
