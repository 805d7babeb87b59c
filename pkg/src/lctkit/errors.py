"""Exception hierarchy.

Every error raised on bad input derives from :class:`LctKitError`; the CLI
maps :class:`ParseError` to exit code 2 and the remaining domain errors to 3.
"""


class LctKitError(Exception):
    """Base class for all library errors."""


class ParseError(LctKitError, ValueError):
    pass


class UnitIdeal(LctKitError, ValueError):
    """A generator with all exponents zero was supplied."""


class EmptyIdeal(LctKitError, ValueError):
    pass


class DimensionMismatch(LctKitError, ValueError):
    pass


class ZeroRestriction(LctKitError, ValueError):
    """No generator survives restriction to a coordinate subspace."""


class NegativeCoordinate(LctKitError, ValueError):
    pass


class ZeroDirection(LctKitError, ValueError):
    pass


class InfiniteThreshold(LctKitError, ValueError):
    """The ray t*v never enters the polyhedron."""


class InfiniteColength(LctKitError, ValueError):
    """The operation needs an ideal whose Newton polyhedron meets every axis."""


# covolume of a polyhedron that misses an axis is unbounded for the same reason
InfiniteCovolume = InfiniteColength


class NonPositiveEntry(LctKitError, ValueError):
    pass


class ConsistencyError(LctKitError, AssertionError):
    """An internal identity that must hold for every input was violated.

    Seeing this means a bug, not bad input.
    """
