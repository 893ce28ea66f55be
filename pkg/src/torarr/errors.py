"""Exception types shared across the library."""


class TorarrError(Exception):
    """Base class for all library errors."""


class ParseError(TorarrError):
    """Malformed textual or JSON input."""


class NotRepresentable(TorarrError):
    """The polynomial lies outside the requested span.  A signal, not a bug."""


class NonIntegral(TorarrError):
    """An exact halving produced a non-integer coefficient."""


class IncomparablePair(TorarrError):
    """The two poset elements are not comparable."""


class InvalidRankSet(TorarrError):
    """Rank-selection set is not a subset of the proper ranks."""


class AmbientMismatch(TorarrError):
    """Operands live in different ambient dimensions."""


class NotEssential(TorarrError):
    """Hyperplane normals do not span the ambient space."""


class NotCentral(TorarrError):
    """Operation requires a central arrangement."""


class NotNonCentral(TorarrError):
    """Operation requires a non-central arrangement."""


class NotAChain(TorarrError):
    """The given elements do not form a valid chain for the operation."""


class VariantMismatch(TorarrError):
    """Fiber-count variant does not match the arrangement's centrality."""


class ConsistencyFailure(TorarrError):
    """Two independent routes to the same invariant disagree."""


class Disconnected(TorarrError):
    """Operation requires a connected graph."""


class UnsupportedDimension(TorarrError):
    """Operation is only implemented for a fixed ambient dimension."""
