"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when caller-supplied data violates an operation's preconditions."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
