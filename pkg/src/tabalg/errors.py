"""Exception types shared across the package."""

from __future__ import annotations


class TableauxError(Exception):
    """Base class for every domain error raised by this package."""


class ShapeNotPartition(TableauxError):
    """Row lengths are not a weakly decreasing sequence of positive parts."""


class RowNotWeaklyIncreasing(TableauxError):
    """A row of the tableau has a strict descent."""


class ColumnNotStrictlyIncreasing(TableauxError):
    """A column of the tableau repeats or decreases."""


class EntryOutOfRange(TableauxError):
    """An entry is not a positive integer within the allowed bound."""


class BoundExceeded(TableauxError):
    """A tableau or column has more rows than the ambient bound allows."""


class InvalidBounds(TableauxError):
    """The bounds (n, m) do not satisfy 1 <= n <= m."""


class NotTwoColumns(TableauxError):
    """The operation requires a tableau with exactly two columns."""


class NonIntegralResult(TableauxError):
    """An exact counting formula produced a fraction where an integer is forced."""


class RelationViolated(TableauxError):
    """A coordinate tuple fails one of the defining product relations."""

    def __init__(self, relation, message: str = ""):
        super().__init__(message or f"relation violated: {relation}")
        self.relation = relation


class NotOrdinary(TableauxError):
    """The operation requires a point whose coordinates are all nonzero."""


class IndexMismatch(TableauxError):
    """A coordinate tuple is not indexed by the expected generator set."""


class ShapeIsColumn(TableauxError):
    """The shape is a single column, so the requested witness does not exist."""


class TooManyParts(TableauxError):
    """The partition has more parts than the row bound allows."""


class ShapeMismatch(TableauxError):
    """Input dimensions are inconsistent with the declared shape."""


class InterlacingViolated(TableauxError):
    """A triangular array fails the interlacing inequalities."""


class InternalError(TableauxError):
    """An internal invariant failed; this indicates a bug, not bad input."""
