"""Exception hierarchy shared by all modules."""


class CominusculeError(Exception):
    """Base class for every error raised by this package."""


class UnsupportedType(CominusculeError):
    pass


class InvalidParameters(CominusculeError):
    pass


class IndexOutOfRange(CominusculeError):
    pass


class Inconsistency(CominusculeError):
    """An internal invariant failed; usually a catalog bug."""


class NotMinuscule(CominusculeError):
    pass


class WeightNotInRep(CominusculeError):
    pass


class ZeroVector(CominusculeError):
    pass


class InvalidSubset(CominusculeError):
    pass


class SizeMismatch(CominusculeError):
    pass


class ZeroCoordinate(CominusculeError):
    pass


class ZeroDenominator(CominusculeError):
    pass


class SampleDegenerate(CominusculeError):
    pass
