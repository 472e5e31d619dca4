"""Exception types shared across the package."""

from __future__ import annotations


class PrecisionError(ValueError):
    """Operands carry incompatible or insufficient truncation precision."""


class InvalidInputError(ValueError):
    """Input data failed a consistency check.

    ``check`` names the failed check so callers (and the CLI) can report it.
    """

    def __init__(self, check: str, message: str):
        super().__init__(f"{check}: {message}")
        self.check = check


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured budget."""


class Inconclusive(Exception):
    """A bounded search ended without a certified answer.

    ``data`` carries whatever partial information was gathered.
    """

    def __init__(self, message: str, data=None):
        super().__init__(message)
        self.data = data
