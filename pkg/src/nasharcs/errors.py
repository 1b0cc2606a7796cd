"""Exception hierarchy shared by all nasharcs modules."""


class NashArcsError(Exception):
    """Base class for every error raised by this package."""


class MalformedDocument(NashArcsError):
    """Input document violates the graph JSON schema."""


class NotATree(NashArcsError):
    """Graph has a cycle or is disconnected."""


class BadWeight(NashArcsError):
    """Vertex weight below the allowed minimum."""


class NotSymmetric(NashArcsError):
    """Matrix operation requires a symmetric matrix."""


class SingularMatrix(NashArcsError):
    """Exact inversion hit a zero pivot."""


class DimensionMismatch(NashArcsError):
    """Cycle or matrix dimensions disagree with the graph."""


class ZeroCycle(NashArcsError):
    """An effective exceptional cycle must be nonzero."""


class NotNegativeDefinite(NashArcsError):
    """Operation only defined over negative-definite intersection matrices."""


class SameVertex(NashArcsError):
    """Operation requires two distinct vertices."""


class EqualityDetected(NashArcsError):
    """Two divisors compared equal on every generator.

    Impossible over an invertible intersection matrix; raised as an
    internal-consistency failure rather than returned as a verdict.
    """


class InconsistentRelation(NashArcsError):
    """Post-hoc check of the relation table failed (internal error)."""


class NotMinimal(NashArcsError):
    """Graph fails the minimality criterion required by the operation."""


class NotRational(NashArcsError):
    """Graph fails the rationality hypothesis required by the operation."""


class NotInImage(NashArcsError):
    """Vertex pair is not covered by the propagation mapping."""


class BadFamilyIndex(NashArcsError):
    """Arc family index outside 1..n."""


class TruncationTooSmall(NashArcsError):
    """Requested power-series truncation cannot witness the needed orders."""


class ZeroPolynomial(NashArcsError):
    """Contact order of the zero polynomial is undefined."""
