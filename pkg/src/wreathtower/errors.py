"""Exception types shared across the package."""

from __future__ import annotations


class WreathTowerError(Exception):
    """Base class for errors raised by this package."""


class BudgetExceededError(WreathTowerError):
    """A computation would exceed a configured resource budget.

    Raised loudly instead of truncating or approximating; `hint` tells the
    caller which cheaper route exists (symbolic bookkeeping, Monte Carlo, a
    raised budget).
    """

    def __init__(self, message: str, *, budget: str, limit: int, required=None, hint: str | None = None):
        extra = f" (budget {budget}={limit}"
        if required is not None:
            extra += f", required ~{required}"
        extra += ")"
        if hint:
            extra += f"; {hint}"
        super().__init__(message + extra)
        self.budget = budget
        self.limit = limit
        self.required = required
        self.hint = hint


class TowerSpecError(WreathTowerError):
    """A tower-spec document failed validation.

    Carries the offending line number and field so the CLI can print a
    precise diagnostic.
    """

    def __init__(self, message: str, *, line: int | None = None, field: str | None = None):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if field is not None:
            loc.append(f"field '{field}'")
        super().__init__((", ".join(loc) + ": " if loc else "") + message)
        self.line = line
        self.field = field
