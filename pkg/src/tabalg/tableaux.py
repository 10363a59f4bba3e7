"""Semistandard Young tableaux under the row-concatenation star product.

A tableau is stored by its rows.  The star product of two tableaux
concatenates their rows and sorts each one.  It turns the set of
semistandard tableaux with at most ``n`` rows and entries in ``{1..m}``
into a cancellative commutative monoid whose identity is the empty
tableau; everything else in the package is built on top of it.

Worked example::

    >>> a = validate([[1, 1], [2, 3], [4]])
    >>> b = validate([[1, 2], [2], [3]])
    >>> print(star(a, b))
    1 1 1 2
    2 2 3
    3 4
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    BoundExceeded,
    ColumnNotStrictlyIncreasing,
    EntryOutOfRange,
    RowNotWeaklyIncreasing,
    ShapeMismatch,
    ShapeNotPartition,
    TableauxError,
)

Shape = tuple[int, ...]
Row = tuple[int, ...]


@total_ordering
@dataclass(frozen=True)
class Tableau:
    """An immutable semistandard Young tableau, stored row by row.

    Instances are assumed valid; use :func:`validate` to build one from
    untrusted data.  Comparison follows the column-major total order:
    first the number of columns, then the columns left to right, where a
    column is ranked by height (shorter is smaller) and then by its
    bottom-to-top reading word.
    """

    rows: tuple[Row, ...] = ()

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def max_entry(self) -> int:
        return max((row[-1] for row in self.rows), default=0)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        """The columns, each read top to bottom."""
        return tuple(
            tuple(row[j] for row in self.rows if len(row) > j)
            for j in range(self.num_cols)
        )

    def column_heights(self) -> Shape:
        """The conjugate shape."""
        return conjugate(self.shape)

    def sort_key(self):
        """Key realizing the column-major total order."""
        return (
            self.num_cols,
            tuple((len(col), tuple(reversed(col))) for col in self.columns()),
        )

    def row_variant_key(self):
        """Key for the row-major total order.

        Ranks by total cell count, then by filling earlier rows more
        (larger first parts come first), then by the concatenated rows.
        This is exactly the order induced by :func:`tabalg.spectra.monomial_key`
        on exponent matrices.
        """
        sup = tuple(i + 1 for i, row in enumerate(self.rows) for _ in row)
        sub = tuple(entry for row in self.rows for entry in row)
        return (self.size, sup, sub)

    def __lt__(self, other: "Tableau") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if not self.rows:
            return "(empty)"
        return "\n".join(" ".join(str(e) for e in row) for row in self.rows)

    def __repr__(self) -> str:
        return f"Tableau({[list(row) for row in self.rows]})"


EMPTY = Tableau()


def validate(rows: Iterable[Iterable[int]], n: int | None = None, m: int | None = None) -> Tableau:
    """Build a tableau from raw rows, checking every invariant.

    Trailing empty rows are dropped.  When bounds are given, the tableau
    must have at most ``n`` rows and entries at most ``m``.

    Raises:
        ShapeNotPartition: row lengths increase or an inner row is empty.
        RowNotWeaklyIncreasing: some row has a strict descent.
        ColumnNotStrictlyIncreasing: some column repeats or decreases.
        EntryOutOfRange: an entry is not an integer in ``{1..m}``.
        BoundExceeded: more than ``n`` rows.
    """
    grid = [tuple(row) for row in rows]
    while grid and not grid[-1]:
        grid.pop()
    for i, row in enumerate(grid):
        if not row:
            raise ShapeNotPartition(f"row {i + 1} is empty but later rows are not")
        if i and len(row) > len(grid[i - 1]):
            raise ShapeNotPartition(f"row {i + 1} is longer than row {i}")
    for i, row in enumerate(grid):
        for entry in row:
            if not isinstance(entry, int) or isinstance(entry, bool) or entry < 1:
                raise EntryOutOfRange(f"entry {entry!r} in row {i + 1} is not a positive integer")
            if m is not None and entry > m:
                raise EntryOutOfRange(f"entry {entry} in row {i + 1} exceeds the bound {m}")
        if any(a > b for a, b in zip(row, row[1:])):
            raise RowNotWeaklyIncreasing(f"row {i + 1} is not weakly increasing: {list(row)}")
    if n is not None and len(grid) > n:
        raise BoundExceeded(f"tableau has {len(grid)} rows, more than the bound {n}")
    for i in range(1, len(grid)):
        for j in range(len(grid[i])):
            if grid[i][j] <= grid[i - 1][j]:
                raise ColumnNotStrictlyIncreasing(
                    f"column {j + 1} is not strictly increasing at row {i + 1}"
                )
    return Tableau(tuple(grid))


def star(t: Tableau, u: Tableau, n: int | None = None) -> Tableau:
    """The star product: concatenate rows pairwise and sort each row."""
    height = max(t.num_rows, u.num_rows)
    if n is not None and height > n:
        raise BoundExceeded(f"product has {height} rows, more than the bound {n}")
    rows = []
    for i in range(height):
        a = t.rows[i] if i < t.num_rows else ()
        b = u.rows[i] if i < u.num_rows else ()
        rows.append(tuple(sorted(a + b)))
    return validate(rows)


def star_all(tableaux: Iterable[Tableau], n: int | None = None) -> Tableau:
    """Fold the star product over a sequence, starting from the empty tableau."""
    result = EMPTY
    for t in tableaux:
        result = star(result, t, n)
    return result


def weight_matrix(t: Tableau, n: int, m: int) -> tuple[tuple[int, ...], ...]:
    """The n-by-m matrix whose (i, j) entry counts the j's in row i.

    The star product adds these matrices, and a valid tableau is
    determined by its matrix.  Entries below the diagonal (j < i) are
    always zero because columns increase strictly.
    """
    if t.num_rows > n:
        raise BoundExceeded(f"tableau has {t.num_rows} rows, more than the bound {n}")
    if t.max_entry > m:
        raise EntryOutOfRange(f"entry {t.max_entry} exceeds the bound {m}")
    counts = [[0] * m for _ in range(n)]
    for i, row in enumerate(t.rows):
        for entry in row:
            counts[i][entry - 1] += 1
    return tuple(tuple(row) for row in counts)


def weight_vector(t: Tableau, m: int) -> tuple[int, ...]:
    """Total multiplicity of each value 1..m, ignoring which row it sits in."""
    if t.max_entry > m:
        raise EntryOutOfRange(f"entry {t.max_entry} exceeds the bound {m}")
    counts = [0] * m
    for row in t.rows:
        for entry in row:
            counts[entry - 1] += 1
    return tuple(counts)


class ReadingWord(NamedTuple):
    letters: tuple[int, ...]
    kind: str  # "column" or "row"


def reading_word(t: Tableau, kind: str = "column") -> ReadingWord:
    """Read the tableau into a word.

    Column reading goes up each column, columns left to right.  Row
    reading goes right to left within each row, rows top to bottom.
    """
    if kind == "column":
        letters = tuple(e for col in t.columns() for e in reversed(col))
    elif kind == "row":
        letters = tuple(e for row in t.rows for e in reversed(row))
    else:
        raise ValueError(f"unknown reading word kind: {kind!r}")
    return ReadingWord(letters, kind)


def tableau_from_reading_word(word: ReadingWord, shape: Shape) -> Tableau:
    """Reassemble a tableau of the given shape from one of its reading words.

    Raises ShapeMismatch when the word length does not fit the shape, and
    the usual validation errors when the filling is not semistandard.
    """
    shape = tuple(shape)
    if any(a < b for a, b in zip(shape, shape[1:])) or any(p < 1 for p in shape):
        raise ShapeNotPartition(f"not a partition: {list(shape)}")
    if len(word.letters) != sum(shape):
        raise ShapeMismatch(
            f"word length {len(word.letters)} does not match shape size {sum(shape)}"
        )
    if word.kind == "column":
        heights = conjugate(shape)
        cols = []
        pos = 0
        for h in heights:
            segment = word.letters[pos : pos + h]
            cols.append(tuple(reversed(segment)))
            pos += h
        rows = [
            tuple(col[i] for col in cols if len(col) > i)
            for i in range(heights[0] if heights else 0)
        ]
    elif word.kind == "row":
        rows = []
        pos = 0
        for length in shape:
            segment = word.letters[pos : pos + length]
            rows.append(tuple(reversed(segment)))
            pos += length
    else:
        raise ValueError(f"unknown reading word kind: {word.kind!r}")
    return validate(rows)


def compare_tableaux(t: Tableau, u: Tableau) -> int:
    """Three-way comparison in the column-major total order (-1, 0 or 1)."""
    a, b = t.sort_key(), u.sort_key()
    return (a > b) - (a < b)


def try_divide(t: Tableau, s: Tableau) -> Tableau | None:
    """Return the tableau u with ``star(s, u) == t``, or None.

    Works row by row on entry multisets; the quotient exists exactly when
    every difference is nonnegative and the leftover rows form a valid
    tableau.
    """
    if s.num_rows > t.num_rows:
        return None
    rows = []
    for i, trow in enumerate(t.rows):
        counts = Counter(trow)
        if i < s.num_rows:
            counts.subtract(s.rows[i])
            if any(v < 0 for v in counts.values()):
                return None
        rows.append(tuple(sorted(counts.elements())))
    try:
        return validate(rows)
    except TableauxError:
        return None


def conjugate(shape: Shape) -> Shape:
    """Transpose a partition."""
    shape = tuple(shape)
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > j) for j in range(shape[0]))


def add_shapes(a: Shape, b: Shape) -> Shape:
    """Entrywise sum of two partitions, padding the shorter with zeros."""
    length = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(length)
    )


def enumerate_tableaux(shape: Shape, max_entry: int) -> Iterator[Tableau]:
    """All semistandard fillings of ``shape`` with entries in {1..max_entry}.

    Yields in ascending filling order; the first tableau fills row i
    entirely with the value i.
    """
    shape = tuple(shape)
    if any(a < b for a, b in zip(shape, shape[1:])) or any(p < 1 for p in shape):
        raise ShapeNotPartition(f"not a partition: {list(shape)}")
    if not shape:
        yield EMPTY
        return
    if len(shape) > max_entry:
        return
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    grid = [[0] * length for length in shape]

    def fill(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau(tuple(tuple(row) for row in grid))
            return
        i, j = cells[idx]
        lo = 1
        if j:
            lo = max(lo, grid[i][j - 1])
        if i:
            lo = max(lo, grid[i - 1][j] + 1)
        for value in range(lo, max_entry + 1):
            grid[i][j] = value
            yield from fill(idx + 1)
        grid[i][j] = 0

    yield from fill(0)


def partitions(total: int, max_parts: int, _max_first: int | None = None) -> Iterator[Shape]:
    """All partitions of ``total`` into at most ``max_parts`` parts."""
    if total == 0:
        yield ()
        return
    if max_parts <= 0:
        return
    first_hi = min(total, _max_first if _max_first is not None else total)
    for first in range(first_hi, 0, -1):
        for rest in partitions(total - first, max_parts - 1, first):
            yield (first, *rest)


def partitions_up_to(max_total: int, max_parts: int, include_empty: bool = True) -> Iterator[Shape]:
    """All partitions of every size up to ``max_total``."""
    start = 0 if include_empty else 1
    for total in range(start, max_total + 1):
        yield from partitions(total, max_parts)


def all_tableaux(n: int, m: int, max_size: int) -> Iterator[Tableau]:
    """All tableaux with at most n rows, entries up to m, and at most max_size cells."""
    for shape in partitions_up_to(max_size, n):
        yield from enumerate_tableaux(shape, m)
