"""Exception hierarchy shared by all tpbessel modules."""


class TPBesselError(Exception):
    """Base class for all errors raised by this package."""


class RangeError(TPBesselError):
    """A rational value falls outside the finite double range."""


class NoConvergence(TPBesselError):
    """Adaptive precision refinement hit its bit cap without agreement."""


class SingularMatrix(TPBesselError):
    """Neville elimination cannot proceed on a singular matrix."""


class TooLarge(TPBesselError):
    """Brute-force minor enumeration refused for a matrix this big."""


class NotTotallyPositive(TPBesselError):
    """A bidiagonal decomposition was requested for a non-TP matrix."""


class DimensionMismatch(TPBesselError):
    """Operands have incompatible sizes."""


class InvalidNodes(TPBesselError):
    """Collocation nodes must be strictly increasing and positive."""


class NonRealSpectrum(TPBesselError):
    """An eigenvalue came back with a non-negligible imaginary part."""


class ParseError(TPBesselError):
    """A matrix, BD, or rational text file failed to parse."""
