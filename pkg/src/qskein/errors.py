"""Exception types shared across the package.

Every error raised on a documented failure path derives from QSkeinError,
so callers can catch the package's failures with a single except clause
while programming mistakes (TypeError and friends) still surface raw.
"""


class QSkeinError(Exception):
    """Base class for all errors raised by this package."""


class NotDivisible(QSkeinError):
    """Exact polynomial division left a nonzero remainder."""


class ZeroDenominator(QSkeinError):
    """A rational function was built or evaluated with a zero denominator."""


class InvalidParams(QSkeinError):
    """Arguments violate a documented precondition."""


class ConstraintViolation(QSkeinError):
    """Bubble parameters break a strand-count relation such as m + k = m' + l."""


class EmptyWindow(QSkeinError):
    """A truncated series was asked to track fewer than one coefficient."""


class NonUnitLeading(QSkeinError):
    """Series inversion needs the lowest tracked coefficient to be +1 or -1."""


class ZeroSeries(QSkeinError):
    """Normalization of a series whose tracked coefficients are all zero."""


class InsufficientOrder(QSkeinError):
    """A comparison window asked for more coefficients than a series tracks."""


class ExponentNotMultipleOf4(QSkeinError):
    """Conversion to the q-layer hit an A-exponent outside 4Z."""
