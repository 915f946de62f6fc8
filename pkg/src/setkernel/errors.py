"""Exception types shared by all kernel modules.

Validation failures carry a minimal structured witness (a pair, triple, or
cycle) so callers and tests can re-check the violation directly.
"""


class KernelError(Exception):
    """Base class for all kernel errors."""


class ValidationError(KernelError):
    """An input violates a structural precondition.

    ``witness`` is a small structured counterexample, e.g. a colliding pair
    for a non-injection or a triple violating transitivity.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceLimitError(KernelError):
    """An operation would exceed a configured size bound."""


class ParseError(KernelError):
    """Malformed textual input; ``position`` is a character offset."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
