"""Exception hierarchy.

Every error raised on bad input derives from :class:`DivpartError`, which is
itself a :class:`ValueError`, so callers that only care about "invalid input"
can catch the builtin.
"""


class DivpartError(ValueError):
    """Base class for all library errors."""


class ZeroVector(DivpartError):
    """Diversity requested for an all-zero count vector (0/0)."""


class NegativeOrder(DivpartError):
    pass


class SumMismatch(DivpartError):
    pass


class ZeroPart(DivpartError):
    pass


class ZeroEntry(DivpartError):
    pass


class AllZero(DivpartError):
    pass


class NotCoprime(DivpartError):
    pass


class OutOfRange(DivpartError):
    pass


class VerticalSlope(DivpartError):
    pass


class NegativeImage(DivpartError):
    """A shear map was applied outside the region where its image is nonnegative."""


class BadEll(DivpartError):
    pass


class DegenerateBudget(DivpartError):
    """``b1`` divides ``b2``; such budgets belong to the perfect-partition route."""


class NonMonotonePath(DivpartError):
    pass


class TooFewResources(DivpartError):
    """More parts were requested than the scarcest type can supply."""

    def __init__(self, message, max_parts=None):
        super().__init__(message)
        self.max_parts = max_parts


class Infeasible(DivpartError):
    """No perfect partition exists; ``max_parts`` is the largest k that has one."""

    def __init__(self, message, max_parts):
        super().__init__(message)
        self.max_parts = max_parts


class SearchSpaceTooLarge(DivpartError):
    def __init__(self, message, estimate, guard):
        super().__init__(message)
        self.estimate = estimate
        self.guard = guard
