"""Shared exception types.

Domain errors (bad argument values) raise plain ``ValueError``. The classes
here cover the two failure modes that deserve structured payloads: search or
materialization budgets running out, and malformed text inputs where the
offending location matters.
"""

from __future__ import annotations

from typing import Any


class BudgetExceededError(RuntimeError):
    """A bounded search or materialization ran into its configured budget.

    This never asserts nonexistence; it reports how far the computation got.
    Structured context (scan logs, last value checked, the limit itself) is
    attached as the ``details`` dict so callers and the CLI can render it.
    """

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details = details


class NumeralError(ValueError):
    """A digit string failed canonical-numeral validation.

    ``position`` is the 0-based index of the offending character, or None
    when the problem is the string as a whole (e.g. empty input).
    """

    def __init__(self, message: str, *, position: int | None = None):
        super().__init__(message)
        self.position = position


class DfaFormatError(ValueError):
    """A DFA description file violated the line-oriented text format.

    ``line`` is the 1-based line number the error was detected on, or None
    for whole-file problems (e.g. truncated input).
    """

    def __init__(self, message: str, *, line: int | None = None):
        super().__init__(message)
        self.line = line
