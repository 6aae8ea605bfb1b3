"""Exceptions and the enumeration budget shared by every exhaustive search."""
import os

DEFAULT_BUDGET = 1_000_000


class LendkitError(Exception):
    pass


class ValidationError(LendkitError):
    """Raised when a structure violates one of its laws.

    ``violations`` holds one human readable line per broken law.
    """

    def __init__(self, violations, what="structure"):
        self.violations = list(violations)
        super().__init__(f"invalid {what}: " + "; ".join(self.violations[:5]))


class UnsupportedInstance(LendkitError):
    pass


class BudgetExceeded(LendkitError):
    pass


class Budget:
    """A counter of search steps that fails loudly once exhausted."""

    def __init__(self, limit=None):
        if limit is None:
            limit = default_budget()
        self.limit = int(limit)
        self.used = 0

    def tick(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(f"enumeration budget of {self.limit} exceeded")

    def __repr__(self):
        return f"Budget({self.used}/{self.limit})"


def default_budget():
    env = os.environ.get("LENDKIT_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def as_budget(budget):
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)
