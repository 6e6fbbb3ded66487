"""Exception types shared across the package."""


class EngineError(Exception):
    """Base class for every error this package raises deliberately."""


class InvalidRank(EngineError):
    """Simple-type rank outside the supported range."""


class NotARoot(EngineError):
    """A vector that is not a root of the given root system."""


class NonDominant(EngineError):
    """A weight with a negative fundamental-weight coordinate."""


class BadIndex(EngineError):
    """A weight or factor index out of range."""


class NotNef(EngineError):
    """A divisor with a negative coefficient on a nef-cone generator."""


class BadArgs(EngineError):
    """Arguments outside an operation's domain."""


class DimensionMismatch(EngineError):
    """Projective points of different ambient dimensions."""


class TooFewPoints(EngineError):
    """Not enough samples for a meaningful estimate."""


class NotConverging(EngineError):
    """A sample sequence whose distances do not tend to zero."""
