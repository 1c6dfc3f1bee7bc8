"""
Exception types raised by the wzw toolkit.

Verification outcomes (theorem rows, oracle comparisons, skein residuals) are
reported as verdicts; the classes below are reserved for conditions that stop
a computation.
"""


class WzwError(Exception):
    """Base class for all toolkit errors."""


class InvalidSpecError(WzwError, ValueError):
    """An AlgebraSpec or CLI flag combination is not acceptable."""

    def __init__(self, message: str, flag: str = None):
        super().__init__(message)
        self.flag = flag


class BoundExceededError(WzwError):
    """A configured size bound would be exceeded."""


class WeylBoundError(BoundExceededError):
    pass


class SearchBoundError(BoundExceededError):
    pass


class InvariantViolationError(WzwError):
    """A constructed object failed one of its structural invariants.

    This signals an implementation bug rather than bad input.
    """


class PoleError(WzwError, ZeroDivisionError):
    """A rational function was evaluated where its denominator vanishes."""


class NonQuantizedMonodromyError(WzwError):
    pass


class UnsupportedCurrentError(WzwError):
    pass


class NoConsistentLabelingError(WzwError):
    pass


class AutomorphismNotFoundError(WzwError):
    pass


class NonUnitError(WzwError, ValueError):
    pass
