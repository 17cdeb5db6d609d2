"""Reduction-step budgeting.

Every top-level Groebner-type computation runs against a step counter; a
single "step" is one leading-term cancellation in polynomial division.
When the counter runs out the computation aborts with
:class:`~symlab.errors.BudgetExhaustedError` rather than returning a wrong
or partial answer.  Budgets are per top-level call, which keeps results
deterministic and independent of what ran before.
"""

from .errors import BudgetExhaustedError

DEFAULT_BUDGET = 10**7

_default_limit = DEFAULT_BUDGET


def default_budget_limit() -> int:
    return _default_limit


def set_default_budget_limit(limit: int) -> None:
    """Set the process-wide default step limit (CLI --budget / SYMLAB_BUDGET)."""
    global _default_limit
    if limit <= 0:
        raise ValueError("budget limit must be positive")
    _default_limit = limit


class StepBudget:
    """Mutable step counter threaded through one top-level computation."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = _default_limit if limit is None else limit
        self.used = 0

    def spend(self, steps: int = 1) -> None:
        self.used += steps
        if self.used > self.limit:
            raise BudgetExhaustedError(self.limit)


def ensure_budget(budget: "StepBudget | None") -> StepBudget:
    """Return the given budget, or a fresh one at the default limit."""
    return budget if budget is not None else StepBudget()
