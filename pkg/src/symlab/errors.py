"""Exception hierarchy shared across the library."""


class SymlabError(Exception):
    """Base class for all library errors."""


class RingMismatchError(SymlabError):
    """Operands live in different polynomial rings."""


class ParseError(SymlabError):
    """Malformed polynomial / ideal / session text."""


class ZeroDivisorError(SymlabError):
    """An operation required a nonzero polynomial or ideal."""


class BudgetExhaustedError(SymlabError):
    """The reduction-step budget ran out before the computation finished.

    Raised instead of returning a possibly wrong or truncated answer.
    """

    def __init__(self, limit):
        super().__init__(f"reduction-step budget of {limit} exhausted")
        self.limit = limit


class StabilizationError(SymlabError):
    """An asymptotic computation did not stabilize within its index budget."""


class WitnessError(SymlabError):
    """A user-supplied component witness failed its validity check."""
