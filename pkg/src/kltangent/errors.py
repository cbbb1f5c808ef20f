"""Domain exceptions shared across the toolkit."""


class KltangentError(Exception):
    """Base class for every error this package raises on bad input."""


class InvalidCartanType(KltangentError):
    """Family letter or rank outside the finite crystallographic range."""


class LetterOutOfRange(KltangentError):
    """A word contains a simple-reflection index outside [1, rank]."""


class NotReduced(KltangentError):
    """An operation requiring a reduced word received a non-reduced one."""


class NotBelow(KltangentError):
    """The target element w is not <= x in Bruhat order."""


class TargetNotContained(KltangentError):
    """The word contains no reduced subword for the target element."""


class GroupTooLarge(KltangentError):
    """Weyl group order exceeds the enumeration guard."""


class LengthBoundExceeded(KltangentError):
    """Word or element length exceeds an enumeration guard."""


class NotMember(KltangentError):
    """The weight is not an element of the given weight set."""


class ExponentOutsideCone(KltangentError):
    """An exponent does not lie in the nonnegative integer span required."""


class BeyondTruncation(KltangentError):
    """Requested a series coefficient past the truncation bound."""


class NotMinimalCosetRep(KltangentError):
    """Element is not the minimal-length representative of its coset."""


class WrongType(KltangentError):
    """Operation is only defined for a different Cartan family."""
