"""Exception taxonomy shared by every module.

Two families only: bad inputs and computations that could not finish.
The CLI maps ParameterError to exit code 2 and ComputationError to 3;
the HTTP layer maps both to 400 responses with an error_kind tag.
"""

from __future__ import annotations


class ParameterError(ValueError):
    """A caller-supplied value violates a documented precondition."""


class ComputationError(RuntimeError):
    """A computation started with valid inputs but could not be completed."""


class BracketError(ComputationError):
    """Root bracketing failed: the target function never changed sign."""


class SearchBudgetError(ComputationError):
    """An exhaustive search exceeded its configured work limit."""
