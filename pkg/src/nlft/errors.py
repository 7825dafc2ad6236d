"""Exception types shared by the transform modules and the CLI."""


class NLFTError(Exception):
    """Base class for all package errors."""


class SingularMatrix(NLFTError):
    pass


class EmptyPoly(NLFTError):
    pass


class InvalidDistribution(NLFTError):
    pass


class EmptyOffDiagonal(NLFTError):
    """Nothing left to peel: the off-diagonal entry has no terms."""


class VanishingDiagonal(NLFTError):
    """The zero-frequency diagonal coefficient is too small to divide by."""


class DegenerateGap(NLFTError):
    pass


class TooLarge(NLFTError):
    """Brute-force enumeration requested beyond its size cap."""


class LengthMismatch(NLFTError):
    pass


class EpsilonTooLarge(NLFTError):
    pass


class VanishingC(NLFTError):
    pass


class NotInImage(NLFTError):
    """Well-formed input that is not the transform of any admissible signal."""


class NotConstMass(NotInImage):
    """Dual samples that do not come from a constant-mass configuration."""


class BadConstraints(NLFTError):
    pass
