"""Exception types shared across the package.

The CLI maps InputError to exit code 2 and CapacityError (including
BudgetExceededError) to exit code 3.
"""


class TempexError(Exception):
    pass


class InputError(TempexError):
    """Malformed instance, flag, or file content."""


class CapacityError(TempexError):
    """Request exceeds a documented hard cap (e.g. k > 64)."""


class BudgetExceededError(CapacityError):
    """An exhaustive enumeration hit its state/size budget."""


class UnreachableError(TempexError):
    """Walk reconstruction requested for an INFINITY arrival."""
