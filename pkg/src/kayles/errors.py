"""Exception types shared across the package."""


class KaylesError(Exception):
    """Base class for all package-specific errors."""


class InvalidLength(KaylesError, ValueError):
    """A path length was negative or otherwise out of range."""


class InvalidVertex(KaylesError, ValueError):
    """A vertex index was outside [1, n] for its path."""


class NoMoves(KaylesError):
    """Move enumeration was requested on an empty position."""


class InsufficientData(KaylesError):
    """A sequence has not been computed far enough for the request."""


class BoundExceeded(KaylesError):
    """An exhaustive computation was asked to exceed its configured bound."""


class NotWinnable(KaylesError):
    """A winning move was requested from a position with no winning move."""


class Unsupported(KaylesError):
    """The requested variant has no fast solver."""
