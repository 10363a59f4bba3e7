"""JSON forms for the public types.

Rationals travel as strings "p/q", or "p" when the denominator is 1.
Tableaux are {"rows": [[...], ...]}, columns are bare entry lists, and
elements are lists of {"coeff", "tableau"} objects sorted by tableau.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .columns import GeneratorSet, generators, validate_column
from .elements import AlgebraElement
from .errors import TableauxError
from .relations import Relation
from .spectra import SpectrumPoint, validate_spectrum_point
from .tableaux import Tableau, validate


def format_rational(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool):
        raise ValueError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str) and re.fullmatch(r"-?\d+(/\d+)?", s):
        try:
            return Fraction(s)
        except ZeroDivisionError as exc:
            raise ValueError(f"not a rational: {s!r}") from exc
    raise ValueError(f"not a rational: {s!r}")


def tableau_to_obj(t: Tableau) -> dict:
    return {"rows": [list(row) for row in t.rows]}


def tableau_from_obj(obj, n: int | None = None, m: int | None = None) -> Tableau:
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ValueError('a tableau must be an object with a "rows" field')
    rows = obj["rows"]
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ValueError('"rows" must be a list of entry lists')
    return validate(rows, n, m)


def element_to_obj(f: AlgebraElement) -> list:
    return [
        {"coeff": format_rational(c), "tableau": tableau_to_obj(t)}
        for t, c in sorted(f.terms.items())
    ]


def element_from_obj(obj, n: int | None = None, m: int | None = None) -> AlgebraElement:
    if not isinstance(obj, list):
        raise ValueError("an element must be a list of {coeff, tableau} objects")
    terms: dict[Tableau, Fraction] = {}
    for item in obj:
        if not isinstance(item, dict) or "coeff" not in item or "tableau" not in item:
            raise ValueError("each term needs a coeff and a tableau")
        t = tableau_from_obj(item["tableau"], n, m)
        terms[t] = terms.get(t, Fraction(0)) + parse_rational(item["coeff"])
    return AlgebraElement(terms)


def point_to_obj(point: SpectrumPoint) -> dict:
    order = generators(point.n, point.m).spectrum_order()
    return {
        "coords": [
            {"column": list(col), "value": format_rational(point.coords[col])}
            for col in order
        ]
    }


def point_from_obj(obj, n: int, m: int) -> SpectrumPoint:
    if not isinstance(obj, dict) or "coords" not in obj:
        raise ValueError('a point must be an object with a "coords" field')
    coords = {}
    for item in obj["coords"]:
        if not isinstance(item, dict) or "column" not in item or "value" not in item:
            raise ValueError("each coordinate needs a column and a value")
        col = validate_column(item["column"], n, m)
        coords[col] = parse_rational(item["value"])
    return validate_spectrum_point(coords, n, m)


def matrix_to_obj(alpha) -> dict:
    return {"alpha": [[format_rational(x) for x in row] for row in alpha]}


def matrix_from_obj(obj, n: int, m: int):
    if not isinstance(obj, dict) or "alpha" not in obj:
        raise ValueError('a matrix must be an object with an "alpha" field')
    grid = [[parse_rational(x) for x in row] for row in obj["alpha"]]
    if len(grid) != n or any(len(row) != m for row in grid):
        raise ValueError(f"expected an {n}x{m} matrix")
    return tuple(tuple(row) for row in grid)


def generators_to_obj(gens: GeneratorSet) -> dict:
    return {
        "n": gens.n,
        "m": gens.m,
        "columns": [list(col) for col in gens.columns],
        "e_part": [list(col) for col in gens.e_columns()],
        "f_part": [list(col) for col in gens.f_columns()],
        "krull_dimension": gens.krull_dimension,
    }


def relation_to_obj(rel: Relation) -> dict:
    return {
        "lhs": [list(rel.lhs[0]), list(rel.lhs[1])],
        "rhs": [list(rel.rhs[0]), list(rel.rhs[1])],
    }


def word_from_obj(obj, n: int, m: int) -> list:
    if not isinstance(obj, list):
        raise ValueError("a column word must be a list of columns")
    return [validate_column(col, n, m) for col in obj]


def gt_to_obj(pattern) -> dict:
    return {"pattern": [list(row) for row in pattern]}


def gt_from_obj(obj):
    if not isinstance(obj, dict) or "pattern" not in obj:
        raise ValueError('a pattern must be an object with a "pattern" field')
    return tuple(tuple(v for v in row) for row in obj["pattern"])
