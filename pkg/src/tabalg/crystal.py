"""Crystal graphs on tableaux, multiplication embeddings, insertion, and
Gelfand-Tsetlin patterns.

The raising and lowering operators act through the usual bracket rule on
the column reading word: each letter i+1 opens a bracket, each letter i
closes one, matched brackets cancel, and the operator moves the extreme
unmatched letter.  The unique vertex killed by every raising operator
fills row i with the value i; the unique vertex killed by every lowering
operator bottom-justifies each column.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import EntryOutOfRange, InternalError, InterlacingViolated, ShapeMismatch, TooManyParts
from .tableaux import (
    EMPTY,
    Shape,
    Tableau,
    conjugate,
    enumerate_tableaux,
    star,
    validate,
)

GTPattern = tuple[tuple[int, ...], ...]


def _column_word_cells(t: Tableau) -> list[tuple[int, int]]:
    # cell positions in column reading order: up each column, left to right
    cells = []
    heights = t.column_heights()
    for j, h in enumerate(heights):
        for r in range(h - 1, -1, -1):
            cells.append((r, j))
    return cells


def _bracket_scan(word: Sequence[int], i: int) -> tuple[list[int], list[int]]:
    # positions of unmatched letters i (closing) and i+1 (opening), in word order
    openings: list[int] = []
    closings: list[int] = []
    for pos, letter in enumerate(word):
        if letter == i + 1:
            openings.append(pos)
        elif letter == i:
            if openings:
                openings.pop()
            else:
                closings.append(pos)
    return closings, openings


def _replace_entry(t: Tableau, r: int, j: int, value: int) -> Tableau:
    rows = [list(row) for row in t.rows]
    rows[r][j] = value
    return validate(rows)


def crystal_f(t: Tableau, i: int) -> Tableau | None:
    """Lowering operator: turn the rightmost unmatched i into i+1."""
    cells = _column_word_cells(t)
    word = [t.rows[r][j] for r, j in cells]
    closings, _ = _bracket_scan(word, i)
    if not closings:
        return None
    r, j = cells[closings[-1]]
    return _replace_entry(t, r, j, i + 1)


def crystal_e(t: Tableau, i: int) -> Tableau | None:
    """Raising operator: turn the leftmost unmatched i+1 into i."""
    cells = _column_word_cells(t)
    word = [t.rows[r][j] for r, j in cells]
    _, openings = _bracket_scan(word, i)
    if not openings:
        return None
    r, j = cells[openings[0]]
    return _replace_entry(t, r, j, i)


def highest_weight_tableau(shape: Shape, n: int) -> Tableau:
    """The filling with row i equal to i everywhere; killed by every
    raising operator."""
    shape = tuple(shape)
    if len(shape) > n:
        raise TooManyParts(f"shape has {len(shape)} parts, more than the bound {n}")
    return validate(tuple((i + 1,) * p for i, p in enumerate(shape)))


def lowest_weight_tableau(shape: Shape, n: int) -> Tableau:
    """The filling whose column of height h holds {n-h+1, .., n}; killed by
    every lowering operator."""
    shape = tuple(shape)
    if len(shape) > n:
        raise TooManyParts(f"shape has {len(shape)} parts, more than the bound {n}")
    heights = conjugate(shape)
    rows = []
    for r in range(len(shape)):
        rows.append(tuple(n - h + r + 1 for h in heights if h > r))
    return validate(rows)


@dataclass(eq=False)
class CrystalGraph:
    """The crystal of all fillings of a shape with entries up to n.

    ``f_edges`` maps (vertex, color) to the lowering image; the raising
    edges are its inverse.  The graph always has exactly one source and
    one sink and is connected.
    """

    n: int
    shape: Shape
    vertices: tuple[Tableau, ...]
    f_edges: dict[tuple[Tableau, int], Tableau]
    source: Tableau
    sink: Tableau
    e_edges: dict[tuple[Tableau, int], Tableau] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.vertices)


def build_crystal(shape: Shape, n: int) -> CrystalGraph:
    """Enumerate the fillings of ``shape`` and wire up the operators.

    Verifies on the way that lowering and raising are mutually inverse,
    that the source and sink are unique, and that the graph is connected;
    any failure raises InternalError.
    """
    shape = tuple(shape)
    if len(shape) > n:
        raise TooManyParts(f"shape has {len(shape)} parts, more than the bound {n}")
    vertices = tuple(sorted(enumerate_tableaux(shape, n)))
    index = {v: k for k, v in enumerate(vertices)}
    f_edges: dict[tuple[Tableau, int], Tableau] = {}
    e_edges: dict[tuple[Tableau, int], Tableau] = {}
    in_degree = [0] * len(vertices)
    out_degree = [0] * len(vertices)
    for v in vertices:
        for i in range(1, n):
            w = crystal_f(v, i)
            if w is None:
                continue
            if w not in index:
                raise InternalError("lowering operator left the crystal")
            if crystal_e(w, i) != v:
                raise InternalError("raising does not invert lowering")
            f_edges[(v, i)] = w
            e_edges[(w, i)] = v
            out_degree[index[v]] += 1
            in_degree[index[w]] += 1
    sources = [v for k, v in enumerate(vertices) if in_degree[k] == 0]
    sinks = [v for k, v in enumerate(vertices) if out_degree[k] == 0]
    if len(sources) != 1 or len(sinks) != 1:
        raise InternalError(
            f"expected a unique source and sink, found {len(sources)} and {len(sinks)}"
        )
    neighbors: dict[Tableau, list[Tableau]] = {v: [] for v in vertices}
    for (v, _), w in f_edges.items():
        neighbors[v].append(w)
        neighbors[w].append(v)
    seen = {vertices[0]}
    queue = [vertices[0]]
    while queue:
        for w in neighbors[queue.pop()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != len(vertices):
        raise InternalError("crystal graph is not connected")
    return CrystalGraph(n, shape, vertices, f_edges, sources[0], sinks[0], e_edges)


def star_embedding(t_fixed: Tableau, shape: Shape, n: int) -> dict[Tableau, Tableau]:
    """The map sending each filling of ``shape`` to its star product with a
    fixed tableau."""
    if t_fixed.num_rows > n or t_fixed.max_entry > n:
        raise ShapeMismatch(f"fixed tableau does not fit within {n} rows and entries")
    return {v: star(v, t_fixed) for v in enumerate_tableaux(shape, n)}


def embedding_violations(
    t_fixed: Tableau, shape: Shape, n: int
) -> list[tuple[Tableau, int, str]]:
    """Edges of the crystal of ``shape`` on which multiplication by the
    fixed tableau fails to commute with an operator.

    An empty list means the map is a strict crystal embedding.  The
    result lists (vertex, color, operator name) triples in a
    deterministic order.
    """
    phi = star_embedding(t_fixed, shape, n)
    out = []
    for v in sorted(phi):
        for i in range(1, n):
            for name, op in (("e", crystal_e), ("f", crystal_f)):
                moved = op(v, i)
                if moved is None:
                    continue
                mapped = op(phi[v], i)
                if mapped is None or mapped != star(moved, t_fixed):
                    out.append((v, i, name))
    return out


def rsk_row_insert(t: Tableau, word: Iterable[int]) -> Tableau:
    """Insert a word letter by letter, bumping along rows.

    Each letter replaces the leftmost strictly larger entry of the
    current row, pushing the displaced entry into the next row.
    """
    rows = [list(row) for row in t.rows]
    for letter in word:
        cur = letter
        r = 0
        while True:
            if r == len(rows):
                rows.append([cur])
                break
            pos = bisect_right(rows[r], cur)
            if pos == len(rows[r]):
                rows[r].append(cur)
                break
            cur, rows[r][pos] = rows[r][pos], cur
            r += 1
    return validate(rows)


def rsk_col_insert(t: Tableau, word: Iterable[int]) -> Tableau:
    """Insert a word letter by letter, bumping along columns.

    Each letter replaces the topmost weakly larger entry of the current
    column, pushing the displaced entry into the next column.
    """
    cols = [list(col) for col in t.columns()]
    for letter in word:
        cur = letter
        j = 0
        while True:
            if j == len(cols):
                cols.append([cur])
                break
            pos = bisect_left(cols[j], cur)
            if pos == len(cols[j]):
                cols[j].append(cur)
                break
            cur, cols[j][pos] = cols[j][pos], cur
            j += 1
    height = max((len(col) for col in cols), default=0)
    rows = [tuple(col[i] for col in cols if len(col) > i) for i in range(height)]
    return validate(rows)


def to_gt_pattern(t: Tableau, n: int) -> GTPattern:
    """The triangular array whose row i records, for each tableau row j,
    how many entries are at most i.

    The star product adds patterns entrywise.
    """
    if t.num_rows > n:
        raise TooManyParts(f"tableau has {t.num_rows} rows, more than the bound {n}")
    if t.max_entry > n:
        raise EntryOutOfRange(f"entry {t.max_entry} exceeds the bound {n}")
    pattern = []
    for i in range(1, n + 1):
        row = tuple(
            sum(1 for e in t.rows[j] if e <= i) if j < t.num_rows else 0
            for j in range(i)
        )
        pattern.append(row)
    return tuple(pattern)


def validate_gt_pattern(pattern) -> GTPattern:
    """Check the triangular shape and the interlacing inequalities."""
    rows = tuple(tuple(row) for row in pattern)
    for i, row in enumerate(rows):
        if len(row) != i + 1:
            raise InterlacingViolated(f"row {i + 1} must have length {i + 1}, got {len(row)}")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InterlacingViolated(f"entries must be nonnegative integers, got {v!r}")
    for i in range(len(rows) - 1):
        for j in range(i + 1):
            if not (rows[i + 1][j] >= rows[i][j] >= rows[i + 1][j + 1]):
                raise InterlacingViolated(
                    f"interlacing fails between rows {i + 1} and {i + 2} at position {j + 1}"
                )
    return rows


def from_gt_pattern(pattern) -> Tableau:
    """Rebuild the tableau whose counting array is the given pattern."""
    rows = validate_gt_pattern(pattern)
    n = len(rows)
    built = []
    for j in range(n):
        entries = []
        for i in range(j, n):
            prev = rows[i - 1][j] if i > j else 0
            entries.extend([i + 1] * (rows[i][j] - prev))
        built.append(tuple(entries))
    return validate(built)


def _vertex_id(t: Tableau) -> str:
    if not t.rows:
        return "empty"
    return "|".join(",".join(str(e) for e in row) for row in t.rows)


def to_dot(graph: CrystalGraph) -> str:
    """Render the crystal as a DOT digraph with colors as edge labels."""
    lines = ["digraph crystal {", "  rankdir=TB;"]
    for v in graph.vertices:
        label = "\\n".join(" ".join(str(e) for e in row) for row in v.rows) or "empty"
        lines.append(f'  "{_vertex_id(v)}" [label="{label}"];')
    index = {v: k for k, v in enumerate(graph.vertices)}
    for (v, i), w in sorted(graph.f_edges.items(), key=lambda kv: (index[kv[0][0]], kv[0][1])):
        lines.append(f'  "{_vertex_id(v)}" -> "{_vertex_id(w)}" [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)


def graph_to_json(graph: CrystalGraph) -> dict:
    """A JSON-ready description with vertices and color-labeled edges."""
    index = {v: k for k, v in enumerate(graph.vertices)}
    edges = [
        {"source": index[v], "target": index[w], "color": i}
        for (v, i), w in sorted(
            graph.f_edges.items(), key=lambda kv: (index[kv[0][0]], kv[0][1])
        )
    ]
    return {
        "n": graph.n,
        "shape": list(graph.shape),
        "vertices": [{"rows": [list(row) for row in v.rows]} for v in graph.vertices],
        "edges": edges,
        "source": index[graph.source],
        "sink": index[graph.sink],
    }
