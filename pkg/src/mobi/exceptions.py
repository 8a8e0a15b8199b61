class MobiError(Exception):
    """Base class for errors raised by this package."""


class DomainError(MobiError, ValueError):
    """An input lies outside the carrier of an algebra or space."""


class SingularSystemError(MobiError, ArithmeticError):
    """The boundary system of a pair construction has no unique solution."""


class AntipodalError(MobiError, ValueError):
    """Antipodal endpoints were given to a geodesic with no chooser."""


class NotAffineError(MobiError):
    """A construction that needs an affine mobi space received one that is not."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ConfigError(MobiError, ValueError):
    """A registry name or parameter blob could not be resolved."""
