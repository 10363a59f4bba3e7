"""Column generators and their distributive lattice structure.

Columns (strictly increasing tuples) generate the star-product monoid.
They carry a partial order under which taller columns with entrywise
smaller tops are lower; meet and join are read off the two columns of
the star product of a pair, and the incomparable pairs are exactly the
pairs appearing in the minimal product relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import (
    BoundExceeded,
    ColumnNotStrictlyIncreasing,
    EntryOutOfRange,
    InvalidBounds,
)
from .tableaux import Tableau, star

Column = tuple[int, ...]


def check_bounds(n: int, m: int) -> None:
    if not (isinstance(n, int) and isinstance(m, int) and 1 <= n <= m):
        raise InvalidBounds(f"bounds must satisfy 1 <= n <= m, got n={n}, m={m}")


def validate_column(entries: Iterable[int], n: int | None = None, m: int | None = None) -> Column:
    """Build a column (nonempty, strictly increasing) from raw entries."""
    col = tuple(entries)
    if not col:
        raise ColumnNotStrictlyIncreasing("a column must be nonempty")
    for entry in col:
        if not isinstance(entry, int) or isinstance(entry, bool) or entry < 1:
            raise EntryOutOfRange(f"entry {entry!r} is not a positive integer")
        if m is not None and entry > m:
            raise EntryOutOfRange(f"entry {entry} exceeds the bound {m}")
    if any(a >= b for a, b in zip(col, col[1:])):
        raise ColumnNotStrictlyIncreasing(f"not strictly increasing: {list(col)}")
    if n is not None and len(col) > n:
        raise BoundExceeded(f"column of height {len(col)} exceeds the bound {n}")
    return col


def column_tableau(col: Column) -> Tableau:
    """The single-column tableau with the given entries, top to bottom."""
    return Tableau(tuple((entry,) for entry in col))


def column_sort_key(col: Column):
    """Height first (shorter is smaller), then the bottom-to-top reading word."""
    return (len(col), tuple(reversed(col)))


@dataclass(frozen=True)
class GeneratorSet:
    """All columns for a bound (n, m), split into relation and free parts.

    ``columns`` is sorted in the column total order.  ``f_part`` indexes
    the columns that occur in no product relation; ``e_part`` indexes the
    rest.  The number of columns equals the Krull dimension of the
    algebra they generate.
    """

    n: int
    m: int
    columns: tuple[Column, ...]
    e_part: tuple[int, ...]
    f_part: tuple[int, ...]

    @property
    def krull_dimension(self) -> int:
        return len(self.columns)

    def e_columns(self) -> tuple[Column, ...]:
        return tuple(self.columns[i] for i in self.e_part)

    def f_columns(self) -> tuple[Column, ...]:
        return tuple(self.columns[i] for i in self.f_part)

    def spectrum_order(self) -> tuple[Column, ...]:
        """Columns in coordinate-tuple order: relation part, then free part."""
        return self.e_columns() + self.f_columns()


def generators(n: int, m: int) -> GeneratorSet:
    """The generator set for bound (n, m).

    The free part is {[m], [1..n]} when m > n and
    {[n], [1..n-1], [1..n]} when m = n; for n = m = 1 the three columns
    collapse to the single column [1].
    """
    check_bounds(n, m)
    cols = sorted(
        (col for k in range(1, n + 1) for col in combinations(range(1, m + 1), k)),
        key=column_sort_key,
    )
    if m == n:
        free = {(n,), tuple(range(1, n)), tuple(range(1, n + 1))}
        free.discard(())
    else:
        free = {(m,), tuple(range(1, n + 1))}
    f_part = tuple(i for i, col in enumerate(cols) if col in free)
    e_part = tuple(i for i, col in enumerate(cols) if col not in free)
    return GeneratorSet(n, m, tuple(cols), e_part, f_part)


def leq(a: Column, b: Column) -> bool:
    """The lattice order on columns.

    ``a <= b`` when a is at least as tall as b and, comparing entries
    from the top, each entry of a is at most the matching entry of b.
    """
    return len(a) >= len(b) and all(x <= y for x, y in zip(a, b))


class ColumnPair(NamedTuple):
    left: Column
    right: Column


def meet_join(a: Column, b: Column) -> ColumnPair:
    """Meet and join of two columns, read off their star product.

    The product of two columns always has exactly two columns; the left
    one is the meet (the taller column with entrywise minima on the
    overlap) and the right one is the join.
    """
    product = star(column_tableau(a), column_tableau(b))
    cols = product.columns()
    return ColumnPair(cols[0], cols[1])


def incomparable_pairs(gens: GeneratorSet) -> list[tuple[Column, Column]]:
    """All unordered lattice-incomparable pairs, listed with the smaller
    column (in the column total order) first."""
    cols = gens.columns
    pairs = []
    for i, a in enumerate(cols):
        for b in cols[i + 1 :]:
            if not leq(a, b) and not leq(b, a):
                pairs.append((a, b))
    return pairs
