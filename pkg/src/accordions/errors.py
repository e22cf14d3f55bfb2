"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """Parameters fall outside the contract of an operation or family."""


class NotApplicableError(ValueError):
    """The query lies outside the regime a decider covers.

    Example: a circulant with both edge lengths even is disconnected, so
    asking whether it is isomorphic to a (connected) accordion graph is
    vacuously false rather than decided by the arithmetic criteria.
    """


class InvariantViolationError(RuntimeError):
    """An internal self-check failed; signals an implementation bug."""


class BudgetExceededError(RuntimeError):
    """The oracle's node budget ran out before the search completed."""
