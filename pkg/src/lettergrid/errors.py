"""Shared exception types and the step-budget helper."""


class InputError(ValueError):
    """Malformed or out-of-range input (bad file, bad vertex, bad word)."""


class BudgetExhausted(RuntimeError):
    """A bounded search ran out of steps before reaching a decision.

    ``best`` carries whatever partial information the search had: for
    lettericity an (lo, hi) interval, for inconsistency a lower bound.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class Budget:
    """Countdown of search steps; ``tick`` raises once the steps run out."""

    def __init__(self, steps=None):
        self.remaining = steps

    def tick(self, what="search", best=None):
        if self.remaining is None:
            return
        self.remaining -= 1
        if self.remaining < 0:
            raise BudgetExhausted(f"step budget exhausted during {what}", best=best)
