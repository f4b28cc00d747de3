"""Exception hierarchy shared by every module."""


class ClgenusError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ClgenusError, ValueError):
    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at index {position})")
        self.position = position


class DomainError(ClgenusError, ValueError):
    """Input lies outside the domain of an operation (e.g. a non-positive word)."""


class PreconditionError(ClgenusError, ValueError):
    pass


class NotBoundary(ClgenusError, ValueError):
    """The chain does not lie in the commutator subgroup."""


class NotRelated(ClgenusError, ValueError):
    """Two positive words do not have the same letter counts."""


class SizeGuard(ClgenusError, ValueError):
    """Input too large for an exhaustive routine."""


class OutOfBounds(ClgenusError, IndexError):
    pass


class InvalidInstance(ClgenusError, ValueError):
    pass


class NotASolution(ClgenusError, ValueError):
    pass
