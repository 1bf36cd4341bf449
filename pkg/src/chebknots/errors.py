"""Exception hierarchy shared by the library and the CLI."""


class ChebKnotsError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ChebKnotsError, ValueError):
    """Arguments outside an operation's domain (CLI exit code 2)."""


class NonzeroRemainder(ChebKnotsError, ArithmeticError):
    """Polynomial division that was expected to be exact left a remainder."""


class NotAnEmbedding(DomainError):
    pass


class NoUnitComponent(DomainError):
    pass


class NotCoprime(DomainError):
    pass


class BoundaryAngle(DomainError):
    pass


class ZFailsToSeparate(DomainError):
    """The height function takes equal values on the two strands of a node."""


class InvalidCrossingSequence(DomainError):
    pass


class UnrealizableCode(DomainError):
    pass


class TooManyCrossings(ChebKnotsError):
    """The bracket state sum was refused because the diagram exceeds the cap (exit 3)."""

    def __init__(self, crossings, cap):
        super().__init__(f"{crossings} crossings exceeds the bracket cap of {cap}")
        self.crossings = crossings
        self.cap = cap


class InternalError(ChebKnotsError, RuntimeError):
    """A precondition that the mathematics guarantees was violated."""
