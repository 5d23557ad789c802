"""Exception types raised across the package."""


class LefschetzError(Exception):
    """Base class for all errors raised by :mod:`lefschetz`."""


class ParseError(LefschetzError, ValueError):
    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


class NotArtinian(LefschetzError):
    pass


class NotPrime(LefschetzError, ValueError):
    pass


class NotSquarePair(LefschetzError):
    pass


class InvalidHilbert(LefschetzError, ValueError):
    pass


class InvalidWidth(LefschetzError, ValueError):
    pass


class ForcingHolds(LefschetzError):
    """No witness exists: the forcing condition is satisfied."""


class PreconditionFailed(LefschetzError, ValueError):
    pass


class SizeMismatch(LefschetzError):
    pass


class ShapeMismatch(LefschetzError):
    pass


class ResourceLimit(LefschetzError):
    """A computation would exceed a configured size or work cap."""


class ExplosionGuard(ResourceLimit):
    pass
