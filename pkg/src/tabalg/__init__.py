"""Exact arithmetic in the star-product algebra of semistandard Young tableaux.

The monoid of semistandard Young tableaux with at most ``n`` rows and
entries at most ``m``, multiplied by rowwise merge-and-sort, generates a
polynomial-flavored algebra.  This package computes with it exactly:
column generators and their lattice, minimal quadratic relations and
their counts, straightening of column words, evaluation points of the
coordinate ring, crystal graphs with their multiplication embeddings,
and Gelfand-Tsetlin patterns.  All arithmetic uses integers and
``fractions.Fraction``; nothing is floated.
"""

from .columns import (
    Column,
    ColumnPair,
    GeneratorSet,
    check_bounds,
    column_sort_key,
    column_tableau,
    generators,
    incomparable_pairs,
    leq,
    meet_join,
    validate_column,
)
from .crystal import (
    CrystalGraph,
    build_crystal,
    crystal_e,
    crystal_f,
    embedding_violations,
    from_gt_pattern,
    graph_to_json,
    highest_weight_tableau,
    lowest_weight_tableau,
    rsk_col_insert,
    rsk_row_insert,
    star_embedding,
    to_dot,
    to_gt_pattern,
    validate_gt_pattern,
)
from .elements import (
    AlgebraElement,
    crystal_ideal_member,
    eval_element,
    non_primality_witness,
    project_entries,
    project_rows,
)
from .errors import (
    BoundExceeded,
    ColumnNotStrictlyIncreasing,
    EntryOutOfRange,
    IndexMismatch,
    InterlacingViolated,
    InternalError,
    InvalidBounds,
    NonIntegralResult,
    NotOrdinary,
    NotTwoColumns,
    RelationViolated,
    RowNotWeaklyIncreasing,
    ShapeIsColumn,
    ShapeMismatch,
    ShapeNotPartition,
    TableauxError,
    TooManyParts,
)
from .relations import (
    PluckerCounts,
    Relation,
    col_fiber,
    minimal_relations,
    plucker_counts,
    sigma,
    straighten,
)
from .serial import (
    element_from_obj,
    element_to_obj,
    format_rational,
    generators_to_obj,
    gt_from_obj,
    gt_to_obj,
    matrix_from_obj,
    matrix_to_obj,
    parse_rational,
    point_from_obj,
    point_to_obj,
    relation_to_obj,
    tableau_from_obj,
    tableau_to_obj,
    word_from_obj,
)
from .spectra import (
    SpectrumPoint,
    evaluate_polynomial,
    exponent_matrix,
    has_matrix_preimage,
    matrix_from_spectrum,
    monomial_key,
    open_contains,
    open_contains_matrix,
    pointwise_inverse,
    pointwise_product,
    spectrum_from_matrix,
    to_polynomial,
    validate_spectrum_point,
)
from .tableaux import (
    EMPTY,
    ReadingWord,
    Tableau,
    add_shapes,
    all_tableaux,
    compare_tableaux,
    conjugate,
    enumerate_tableaux,
    partitions,
    partitions_up_to,
    reading_word,
    star,
    star_all,
    tableau_from_reading_word,
    try_divide,
    validate,
    weight_matrix,
    weight_vector,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "BoundExceeded",
    "Column",
    "ColumnNotStrictlyIncreasing",
    "ColumnPair",
    "CrystalGraph",
    "EMPTY",
    "EntryOutOfRange",
    "GeneratorSet",
    "IndexMismatch",
    "InterlacingViolated",
    "InternalError",
    "InvalidBounds",
    "NonIntegralResult",
    "NotOrdinary",
    "NotTwoColumns",
    "PluckerCounts",
    "ReadingWord",
    "Relation",
    "RelationViolated",
    "RowNotWeaklyIncreasing",
    "ShapeIsColumn",
    "ShapeMismatch",
    "ShapeNotPartition",
    "SpectrumPoint",
    "Tableau",
    "TableauxError",
    "TooManyParts",
    "add_shapes",
    "all_tableaux",
    "build_crystal",
    "check_bounds",
    "col_fiber",
    "column_sort_key",
    "column_tableau",
    "compare_tableaux",
    "conjugate",
    "crystal_e",
    "crystal_f",
    "crystal_ideal_member",
    "element_from_obj",
    "element_to_obj",
    "embedding_violations",
    "enumerate_tableaux",
    "eval_element",
    "evaluate_polynomial",
    "exponent_matrix",
    "format_rational",
    "from_gt_pattern",
    "generators",
    "generators_to_obj",
    "graph_to_json",
    "gt_from_obj",
    "gt_to_obj",
    "has_matrix_preimage",
    "highest_weight_tableau",
    "incomparable_pairs",
    "leq",
    "lowest_weight_tableau",
    "matrix_from_obj",
    "matrix_from_spectrum",
    "matrix_to_obj",
    "meet_join",
    "minimal_relations",
    "monomial_key",
    "non_primality_witness",
    "open_contains",
    "open_contains_matrix",
    "parse_rational",
    "partitions",
    "partitions_up_to",
    "plucker_counts",
    "point_from_obj",
    "point_to_obj",
    "pointwise_inverse",
    "pointwise_product",
    "project_entries",
    "project_rows",
    "reading_word",
    "relation_to_obj",
    "rsk_col_insert",
    "rsk_row_insert",
    "sigma",
    "spectrum_from_matrix",
    "star",
    "star_all",
    "star_embedding",
    "straighten",
    "tableau_from_obj",
    "tableau_from_reading_word",
    "tableau_to_obj",
    "to_dot",
    "to_gt_pattern",
    "to_polynomial",
    "try_divide",
    "validate",
    "validate_column",
    "validate_gt_pattern",
    "validate_spectrum_point",
    "weight_matrix",
    "weight_vector",
    "word_from_obj",
]
