"""Exception hierarchy shared by the library and the CLI."""


class LandenError(Exception):
    """Base class for every error raised by ratlanden."""


class ValidationError(LandenError, ValueError):
    """The integrand is not a member of the coefficient space."""


class OddDegree(ValidationError):
    pass


class DegreeGap(ValidationError):
    """Numerator degree exceeds p - 2."""


class RealPole(ValidationError):
    """The denominator vanishes somewhere on the real line."""


class ZeroTrailingCoeff(ValidationError):
    pass


class ZeroTrailing(ZeroTrailingCoeff):
    """phi is undefined: the trailing denominator coefficient is zero."""


class InvalidOrder(LandenError, ValueError):
    pass


class NonZeroRemainder(LandenError, ArithmeticError):
    """An exact division left a remainder."""


class ArityMismatch(LandenError, ValueError):
    pass


class FormatError(LandenError, ValueError):
    """A cache file or report could not be parsed."""


class VersionMismatch(FormatError):
    pass


class ResourceLimit(LandenError):
    """Symbolic generation exceeded the configured term budget."""


class PrecisionExhausted(LandenError, ArithmeticError):
    """The working precision cannot resolve the requested quantity."""


class NoConvergence(LandenError, ArithmeticError):
    pass


class DivergenceSuspected(LandenError, ArithmeticError):
    pass


class InsufficientData(LandenError, ValueError):
    pass
