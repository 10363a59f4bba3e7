"""Maximal-spectrum machinery: exponent matrices, evaluation matrices, and
generator-indexed coordinate tuples.

Sending a tableau to its weight matrix embeds the monoid algebra into a
polynomial ring in an n-by-m grid of variables.  Evaluating the grid at
a rational matrix therefore evaluates elements; packaging the values of
all column generators gives a point on the variety cut out by the
product relations, and conversely every ordinary point lifts back to a
matrix.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .columns import Column, column_tableau, generators
from .elements import AlgebraElement, eval_element
from .errors import (
    IndexMismatch,
    InternalError,
    NotOrdinary,
    RelationViolated,
    ShapeMismatch,
)
from .relations import minimal_relations
from .tableaux import Tableau, weight_matrix

ExponentMatrix = tuple[tuple[int, ...], ...]
Matrix = tuple[tuple[Fraction, ...], ...]


def exponent_matrix(t: Tableau, n: int, m: int) -> ExponentMatrix:
    """Exponents of the polynomial monomial attached to a tableau.

    This is exactly the weight matrix; the map is injective and turns
    star products into monomial products.
    """
    return weight_matrix(t, n, m)


def to_polynomial(f: AlgebraElement, n: int, m: int) -> dict[ExponentMatrix, Fraction]:
    """Image of an element in the polynomial ring, keyed by exponent matrix."""
    poly: dict[ExponentMatrix, Fraction] = {}
    for t, c in f.terms.items():
        key = exponent_matrix(t, n, m)
        poly[key] = poly.get(key, Fraction(0)) + c
    return {k: v for k, v in poly.items() if v}


def evaluate_polynomial(poly: Mapping[ExponentMatrix, Fraction], alpha: Sequence[Sequence]) -> Fraction:
    """Evaluate a polynomial (exponent-matrix form) at a rational matrix."""
    total = Fraction(0)
    for exps, c in poly.items():
        prod = Fraction(1)
        for i, row in enumerate(exps):
            for j, e in enumerate(row):
                if e:
                    prod *= Fraction(alpha[i][j]) ** e
        total += c * prod
    return total


def monomial_key(exps: ExponentMatrix):
    """Sort key for the monomial order on exponent matrices.

    Ranks by total degree, then by the sequence of row indices of the
    variables (with multiplicity, rows ascending), then by the sequence
    of column indices.  On images of tableaux this induces exactly the
    row-major tableau order.
    """
    sup: list[int] = []
    sub: list[int] = []
    for i, row in enumerate(exps):
        for j, e in enumerate(row):
            sup.extend([i + 1] * e)
            sub.extend([j + 1] * e)
    return (len(sup), tuple(sup), tuple(sub))


class SpectrumPoint:
    """Exact rational coordinates indexed by the column generators."""

    __slots__ = ("n", "m", "_coords")

    def __init__(self, n: int, m: int, coords: Mapping[Column, int | Fraction]):
        self.n = n
        self.m = m
        self._coords = {tuple(col): Fraction(v) for col, v in coords.items()}

    @property
    def coords(self) -> dict[Column, Fraction]:
        return self._coords

    def value(self, col) -> Fraction:
        key = tuple(col)
        if key not in self._coords:
            raise IndexMismatch(f"no coordinate for column {list(col)}")
        return self._coords[key]

    def is_ordinary(self) -> bool:
        return all(self._coords.values())

    def as_tuple(self) -> tuple[Fraction, ...]:
        """Coordinates in canonical order: relation part, then free part."""
        order = generators(self.n, self.m).spectrum_order()
        return tuple(self._coords[col] for col in order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpectrumPoint):
            return NotImplemented
        return (self.n, self.m, self._coords) == (other.n, other.m, other._coords)

    __hash__ = None

    def __repr__(self) -> str:
        values = ", ".join(str(v) for v in self.as_tuple())
        return f"SpectrumPoint({self.n}, {self.m}, ({values}))"


def _as_matrix(alpha, n: int, m: int) -> Matrix:
    grid = tuple(tuple(Fraction(x) for x in row) for row in alpha)
    if len(grid) != n or any(len(row) != m for row in grid):
        raise ShapeMismatch(f"expected an {n}x{m} matrix")
    return grid


def spectrum_from_matrix(alpha, n: int, m: int) -> SpectrumPoint:
    """Evaluate every column generator at a rational matrix.

    The coordinate of a column with entries a_1 < ... < a_h is the
    product of the matrix entries (i, a_i) over the rows i = 1..h.  The
    resulting point always satisfies the product relations.
    """
    grid = _as_matrix(alpha, n, m)
    coords = {}
    for col in generators(n, m).columns:
        prod = Fraction(1)
        for i, entry in enumerate(col):
            prod *= grid[i][entry - 1]
        coords[col] = prod
    return SpectrumPoint(n, m, coords)


def validate_spectrum_point(coords: Mapping, n: int, m: int) -> SpectrumPoint:
    """Check a coordinate mapping against the minimal relations.

    Raises IndexMismatch when the keys are not exactly the generator
    columns, and RelationViolated (carrying the first failing relation)
    when some product relation does not hold.
    """
    gens = generators(n, m)
    normalized = {tuple(col): Fraction(v) for col, v in coords.items()}
    if set(normalized) != set(gens.columns):
        raise IndexMismatch("coordinates are not indexed by the generator columns")
    for rel in minimal_relations(n, m):
        (l0, l1), (r0, r1) = rel.lhs, rel.rhs
        if normalized[l0] * normalized[l1] != normalized[r0] * normalized[r1]:
            raise RelationViolated(rel)
    return SpectrumPoint(n, m, normalized)


def _divides(a: ExponentMatrix, b: ExponentMatrix) -> bool:
    return all(x <= y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def has_matrix_preimage(point: SpectrumPoint) -> bool:
    """Whether a valid point arises from some matrix.

    A point is in the image exactly when its zero set is closed under
    monomial divisibility: whenever the coordinate of a column vanishes,
    so does the coordinate of every column whose monomial it divides.
    Ordinary points pass vacuously.
    """
    gens = generators(point.n, point.m)
    mats = {
        col: exponent_matrix(column_tableau(col), point.n, point.m)
        for col in gens.columns
    }
    zeros = [col for col in gens.columns if point.coords[col] == 0]
    for col in zeros:
        for other in gens.columns:
            if point.coords[other] != 0 and _divides(mats[col], mats[other]):
                return False
    return True


def matrix_from_spectrum(point: SpectrumPoint) -> Matrix:
    """Lift an ordinary valid point to a matrix inducing it.

    Entries are recovered by induction on column height: the coordinate
    of a height-h column divided by the already known entries of its
    first h-1 rows determines the matrix entry at (h, last entry of the
    column).  Entries below the diagonal are unconstrained and set to 1.
    """
    if not point.is_ordinary():
        raise NotOrdinary("only points with all coordinates nonzero can be lifted")
    n, m = point.n, point.m
    beta: list[list[Fraction | None]] = [[None] * m for _ in range(n)]
    for col in generators(n, m).columns:
        h = len(col)
        prod = Fraction(1)
        for i in range(h - 1):
            prod *= beta[i][col[i] - 1]
        value = point.coords[col] / prod
        known = beta[h - 1][col[-1] - 1]
        if known is None:
            beta[h - 1][col[-1] - 1] = value
        elif known != value:
            raise InternalError("inconsistent lift; the point violates a relation")
    for i in range(n):
        for j in range(m):
            if beta[i][j] is None:
                beta[i][j] = Fraction(1)
    return tuple(tuple(row) for row in beta)


def pointwise_product(a: SpectrumPoint, b: SpectrumPoint) -> SpectrumPoint:
    """Coordinatewise product, the group law on ordinary points."""
    if (a.n, a.m) != (b.n, b.m):
        raise IndexMismatch("points live over different bounds")
    if not a.is_ordinary() or not b.is_ordinary():
        raise NotOrdinary("the group law is defined on ordinary points only")
    return SpectrumPoint(a.n, a.m, {col: a.coords[col] * b.coords[col] for col in a.coords})


def pointwise_inverse(a: SpectrumPoint) -> SpectrumPoint:
    """Coordinatewise reciprocal of an ordinary point."""
    if not a.is_ordinary():
        raise NotOrdinary("only ordinary points are invertible")
    return SpectrumPoint(a.n, a.m, {col: 1 / v for col, v in a.coords.items()})


def open_contains(f: AlgebraElement, point: SpectrumPoint) -> bool:
    """Membership of a point in the basic open set where ``f`` does not vanish."""
    return eval_element(f, point) != 0


def open_contains_matrix(f: AlgebraElement, alpha, n: int, m: int) -> bool:
    """Same membership test through the polynomial ring: push ``f`` to a
    polynomial and evaluate it at the matrix."""
    grid = _as_matrix(alpha, n, m)
    return evaluate_polynomial(to_polynomial(f, n, m), grid) != 0
