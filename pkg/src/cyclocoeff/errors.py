"""Exception types raised across the package."""


class CycloError(Exception):
    """Base class for all package errors."""


class NotInvertible(CycloError, ValueError):
    pass


class NotCoprime(CycloError, ValueError):
    pass


class InvalidPrimes(CycloError, ValueError):
    pass


class OutOfRange(CycloError, ValueError):
    pass


class TooLarge(CycloError):
    """A requested expansion exceeds the configured degree cap."""


class InexactDivision(CycloError, ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class NotNumerical(CycloError, ValueError):
    """The generators of a semigroup share a common factor."""


class BadMirrorPrime(CycloError, ValueError):
    pass


class SearchExhausted(CycloError):
    pass
