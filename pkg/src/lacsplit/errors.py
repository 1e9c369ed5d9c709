"""Exception hierarchy shared by every layer of the package."""


class LacsplitError(Exception):
    """Base class for all errors raised by lacsplit."""


class NotPrime(LacsplitError, ValueError):
    pass


class TooLarge(LacsplitError, ValueError):
    pass


class ZeroInverse(LacsplitError, ZeroDivisionError):
    pass


class ContextMismatch(LacsplitError, ValueError):
    pass


class DivisionByZeroPoly(LacsplitError, ZeroDivisionError):
    pass


class BothZero(LacsplitError, ValueError):
    pass


class DegreeTooHigh(LacsplitError, ValueError):
    pass


class ConstantModulus(LacsplitError, ValueError):
    pass


class InvalidPattern(LacsplitError, ValueError):
    pass


class InvalidCoefficients(LacsplitError, ValueError):
    pass


class IsolatedVertex(LacsplitError, ValueError):
    pass


class BudgetExceeded(LacsplitError):
    """An enumeration would exceed its explicit step budget.

    Raised instead of returning a partial count.
    """


class InvariantViolation(LacsplitError, AssertionError):
    """A proven mathematical invariant failed on a concrete input."""
