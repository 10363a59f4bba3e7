"""Formal rational linear combinations of tableaux, and the crystal ideals.

The monoid algebra has the tableaux themselves as a basis; multiplication
extends the star product bilinearly.  All coefficients are exact
rationals.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .errors import IndexMismatch, ShapeIsColumn, ShapeNotPartition, TooManyParts
from .tableaux import (
    EMPTY,
    Shape,
    Tableau,
    enumerate_tableaux,
    star,
    try_divide,
    validate,
)

Scalar = int | Fraction


class AlgebraElement:
    """A finite rational linear combination of tableaux.

    Elements are immutable; arithmetic returns new objects and terms with
    zero coefficient are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Tableau, Scalar] | None = None):
        data: dict[Tableau, Fraction] = {}
        for t, c in (terms or {}).items():
            coeff = Fraction(c)
            if coeff:
                data[t] = coeff
        self._terms = data

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls()

    @classmethod
    def one(cls) -> "AlgebraElement":
        return cls({EMPTY: 1})

    @classmethod
    def monomial(cls, t: Tableau, coeff: Scalar = 1) -> "AlgebraElement":
        return cls({t: coeff})

    @property
    def terms(self) -> Mapping[Tableau, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, t: Tableau) -> Fraction:
        return self._terms.get(t, Fraction(0))

    def support(self) -> tuple[Tableau, ...]:
        return tuple(sorted(self._terms))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # mutable-dict backed; not hashable

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        data = dict(self._terms)
        for t, c in other._terms.items():
            data[t] = data.get(t, Fraction(0)) + c
        return AlgebraElement(data)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement({t: -c for t, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            data: dict[Tableau, Fraction] = {}
            for t, c in self._terms.items():
                for u, d in other._terms.items():
                    product = star(t, u)
                    data[product] = data.get(product, Fraction(0)) + c * d
            return AlgebraElement(data)
        if isinstance(other, (int, Fraction)):
            return AlgebraElement({t: c * other for t, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._terms:
            return "AlgebraElement(0)"
        parts = [f"{c}*{t!r}" for t, c in sorted(self._terms.items())]
        return "AlgebraElement(" + " + ".join(parts) + ")"


def eval_element(f: AlgebraElement, point) -> Fraction:
    """Evaluate an element at a spectrum point.

    Each tableau factors into its columns; the value of the tableau is
    the product of the point's coordinates at those columns, and the
    empty tableau evaluates to 1.
    """
    total = Fraction(0)
    for t, c in f.terms.items():
        prod = Fraction(1)
        for col in t.columns():
            if col not in point.coords:
                raise IndexMismatch(f"point has no coordinate for column {list(col)}")
            prod *= point.coords[col]
        total += c * prod
    return total


def _check_shape(shape: Shape, n: int) -> Shape:
    shape = tuple(shape)
    if any(a < b for a, b in zip(shape, shape[1:])) or any(p < 1 for p in shape):
        raise ShapeNotPartition(f"not a partition: {list(shape)}")
    if len(shape) > n:
        raise TooManyParts(f"shape has {len(shape)} parts, more than the bound {n}")
    return shape


def crystal_ideal_member(f: AlgebraElement, shape: Shape, n: int, m: int) -> bool:
    """Membership in the ideal spanned by all tableaux divisible by some
    filling of ``shape``.

    The ideal is spanned by monomials, so f belongs exactly when every
    tableau in its support does.  For a single-column shape of height k
    this reduces to: every tableau in the support has a column of height
    exactly k.
    """
    shape = _check_shape(shape, n)
    if not shape:
        return True
    if all(p == 1 for p in shape):
        k = len(shape)
        return all(k in (len(col) for col in t.columns()) for t in f.terms)
    fillings = list(enumerate_tableaux(shape, m))
    return all(
        any(try_divide(t, s) is not None for s in fillings) for t in f.terms
    )


def non_primality_witness(shape: Shape, n: int, m: int) -> tuple[AlgebraElement, AlgebraElement]:
    """Two monomials outside the ideal of ``shape`` whose product lies in it.

    Splitting the first column off any filling of the shape works
    whenever the shape has at least two columns; for single-column shapes
    the ideal is prime and ShapeIsColumn is raised.
    """
    shape = _check_shape(shape, n)
    if not shape or shape[0] < 2:
        raise ShapeIsColumn(f"the ideal of shape {list(shape)} is prime; no witness exists")
    filling = next(enumerate_tableaux(shape, m))
    first = validate(tuple((row[0],) for row in filling.rows))
    rest = validate(tuple(row[1:] for row in filling.rows))
    return AlgebraElement.monomial(first), AlgebraElement.monomial(rest)


def project_rows(f: AlgebraElement, n_target: int) -> AlgebraElement:
    """Algebra map killing every tableau with more than ``n_target`` rows."""
    return AlgebraElement(
        {t: c for t, c in f.terms.items() if t.num_rows <= n_target}
    )


def project_entries(f: AlgebraElement, m_target: int) -> AlgebraElement:
    """Algebra map killing every tableau with an entry above ``m_target``."""
    return AlgebraElement(
        {t: c for t, c in f.terms.items() if t.max_entry <= m_target}
    )
