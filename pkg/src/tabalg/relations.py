"""Defining relations of the column presentation, their exact counts, and
the straightening rewriter.

Every product of two columns is a two-column tableau; reading off its
columns gives the minimal factorization.  The minimal relation set
consists of all ordered column pairs whose product factors differently,
and its size has two closed-form expressions that must agree with the
direct count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, NamedTuple, Sequence

from .columns import (
    Column,
    check_bounds,
    column_sort_key,
    column_tableau,
    generators,
    leq,
    meet_join,
    validate_column,
)
from .errors import InternalError, NonIntegralResult, NotTwoColumns
from .tableaux import EMPTY, Tableau, validate


@dataclass(frozen=True)
class Relation:
    """A product relation lhs[0] * lhs[1] = rhs[0] * rhs[1] among columns.

    The left side is ordered taller first (or smaller first at equal
    heights); the right side is the minimal factorization of the common
    product, which is never equal to the left side as an unordered pair.
    """

    lhs: tuple[Column, Column]
    rhs: tuple[Column, Column]


def col_fiber(s: Tableau) -> list[tuple[Column, Column]]:
    """All unordered factorizations of a two-column tableau into columns.

    Each factorization is listed once, taller factor first (smaller
    factor first at equal heights), and the list is sorted with taller
    first factors before shorter ones.  The first element is always the
    pair of columns of ``s`` itself.
    """
    if s.num_cols != 2:
        raise NotTwoColumns(f"expected exactly 2 columns, got {s.num_cols}")
    heights = s.column_heights()
    tall_h, short_h = heights[0], heights[1]
    splits = set()
    for mask in range(1 << short_h):
        tall, short = [], []
        for i in range(short_h):
            x, y = s.rows[i]
            if (mask >> i) & 1:
                tall.append(y)
                short.append(x)
            else:
                tall.append(x)
                short.append(y)
        tall.extend(s.rows[i][0] for i in range(short_h, tall_h))
        if all(a < b for a, b in zip(tall, tall[1:])) and all(
            a < b for a, b in zip(short, short[1:])
        ):
            pair = (tuple(tall), tuple(short))
            if tall_h == short_h and column_sort_key(pair[1]) < column_sort_key(pair[0]):
                pair = (pair[1], pair[0])
            splits.add(pair)
    return sorted(splits, key=lambda p: (-len(p[0]), column_sort_key(p[0])))


def minimal_relations(n: int, m: int) -> list[Relation]:
    """The minimal generating set of product relations for bound (n, m).

    An ordered pair (a, b) with a taller than b, or of equal height with
    a before b, contributes a relation exactly when the product a * b
    does not factor back as (a, b); the right side is then the meet and
    join of the pair.
    """
    cols = generators(n, m).columns
    out = []
    for a in cols:
        for b in cols:
            if len(a) > len(b) or (len(a) == len(b) and column_sort_key(a) < column_sort_key(b)):
                low, high = meet_join(a, b)
                if low != a:
                    out.append(Relation((a, b), (low, high)))
    return out


def sigma(n: int, m: int, method: str = "double_sum") -> int:
    """Size of the minimal relation set, by one of three routes.

    ``double_sum`` evaluates the summation formula with exact rational
    arithmetic, ``closed`` evaluates its rearranged form, and ``brute``
    counts the relations directly.
    """
    check_bounds(n, m)
    if method == "double_sum":
        return _sigma_sum(n, m)
    if method == "closed":
        return _sigma_closed(n, m)
    if method == "brute":
        return len(minimal_relations(n, m))
    raise ValueError(f"unknown method: {method!r}")


def _as_integer(total: Fraction, what: str) -> int:
    if total.denominator != 1:
        raise NonIntegralResult(f"{what} evaluated to the non-integer {total}")
    return int(total)


def _sum_term(n: int, m: int, i: int, k: int, j: int) -> Fraction:
    delta = 1 if j == 0 else 0
    return (
        comb(m, k)
        * (Fraction(1) - Fraction(delta, 2))
        * Fraction(i - k - delta, i + j - k + 1)
        * comb(m - k, 2 * i + j - 2 * k)
        * comb(2 * i + j - 2 * k, i - k)
    )


def _sigma_sum(n: int, m: int) -> int:
    total = Fraction(0)
    for i in range(1, n + 1):
        for k in range(max(0, 2 * i - m), i):
            for j in range(0, min(n - i, m - 2 * i + k) + 1):
                total += _sum_term(n, m, i, k, j)
    return _as_integer(total, "relation count")


def _sigma_closed(n: int, m: int) -> int:
    total = Fraction(0)
    for i in range(1, n + 1):
        inner = Fraction(0)
        for k in range(1, min(i, m - i) + 1):
            bracket = -Fraction(1, 2) * comb(m - i, k)
            for j in range(k, min(n + k - i, m - i) + 1):
                bracket += Fraction(k, j + 1) * comb(m - i, j)
            inner += comb(i, k) * bracket
        total += comb(m, i) * inner
    return _as_integer(total, "relation count")


class PluckerCounts(NamedTuple):
    grassmann: tuple[int, ...]
    incidence: int
    total: int


def plucker_counts(n: int, m: int) -> PluckerCounts:
    """Split the relation count into same-height and mixed-height parts.

    ``grassmann[i-1]`` counts relations between two columns of height i
    (these match the quadratic relations of the i-th Grassmannian), and
    ``incidence`` counts relations between columns of different heights.
    The two parts always sum to :func:`sigma`.
    """
    check_bounds(n, m)
    grassmann = []
    for i in range(1, n + 1):
        part = Fraction(0)
        for k in range(max(0, 2 * i - m), i):
            if m - 2 * i + k >= 0:
                part += _sum_term(n, m, i, k, 0)
        grassmann.append(_as_integer(part, f"height-{i} relation count"))
    incidence = Fraction(0)
    for i in range(1, n + 1):
        for k in range(max(0, 2 * i - m), i):
            for j in range(1, min(n - i, m - 2 * i + k) + 1):
                incidence += _sum_term(n, m, i, k, j)
    incidence_count = _as_integer(incidence, "mixed-height relation count")
    return PluckerCounts(tuple(grassmann), incidence_count, sum(grassmann) + incidence_count)


def straighten(
    word: Iterable[Iterable[int]],
    n: int,
    m: int,
    rng: random.Random | None = None,
) -> Tableau:
    """Rewrite a multiset of columns into the tableau it multiplies to.

    Repeatedly replaces a lattice-incomparable pair of columns by its
    meet and join until all columns are pairwise comparable, then stacks
    the resulting chain side by side.  The result equals the star product
    of the word regardless of the order in which pairs are picked; pass
    ``rng`` to randomize that order.

    Raises InternalError if the rewrite fails to terminate within
    ``len(word)**2 * n * m`` steps, which cannot happen for valid input.
    """
    check_bounds(n, m)
    cols = sorted((validate_column(c, n, m) for c in word), key=column_sort_key)
    if not cols:
        return EMPTY
    limit = max(1, len(cols) ** 2 * n * m)
    for _ in range(limit):
        clashes = [
            (i, j)
            for i in range(len(cols))
            for j in range(i + 1, len(cols))
            if not leq(cols[i], cols[j]) and not leq(cols[j], cols[i])
        ]
        if not clashes:
            chain = sorted(cols, key=lambda c: (-len(c), c))
            rows = [
                tuple(col[i] for col in chain if len(col) > i)
                for i in range(len(chain[0]))
            ]
            return validate(rows)
        i, j = clashes[0] if rng is None else clashes[rng.randrange(len(clashes))]
        low, high = meet_join(cols[i], cols[j])
        del cols[j]
        del cols[i]
        cols.extend((low, high))
        cols.sort(key=column_sort_key)
    raise InternalError("straightening did not terminate within its iteration bound")
