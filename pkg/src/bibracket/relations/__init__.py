"""Relation discovery and dimension counts by exact linear algebra over the rationals."""

from .dims import (
    DimensionReport,
    ExpressionResult,
    RelationReport,
    audit_relation,
    dimension_table,
    evaluate_rows,
    express_in_basis,
    filtration_ranks,
    find_relations,
    graded_dim,
)
from .ds_counts import DsVariant, ds_counts, ds_pairs
from .families import (
    BiBracketFamily,
    BracketFamily,
    FamilyRegistry,
    GeneratorFamily,
    ShuffleBracketFamily,
    StuffleBracketFamily,
    bracket_generators,
    family_names,
    get_family,
    get_registry,
)
from .matrix import CoeffMatrix, StreamingEchelon, rank, rank_kernel, sparse_rank
from .output import CommandReport, make_report, table_rows, to_csv, to_latex, to_text
from .sequences import (
    SEQUENCES,
    cds_count,
    d_sequence,
    dprime_sequence,
    gen_count,
    gen_sequence,
    rational_coefficients,
)

__all__ = [
    "SEQUENCES",
    "BiBracketFamily",
    "BracketFamily",
    "CoeffMatrix",
    "CommandReport",
    "DimensionReport",
    "DsVariant",
    "ExpressionResult",
    "FamilyRegistry",
    "GeneratorFamily",
    "RelationReport",
    "ShuffleBracketFamily",
    "StreamingEchelon",
    "StuffleBracketFamily",
    "audit_relation",
    "bracket_generators",
    "cds_count",
    "d_sequence",
    "dimension_table",
    "dprime_sequence",
    "ds_counts",
    "ds_pairs",
    "evaluate_rows",
    "express_in_basis",
    "family_names",
    "filtration_ranks",
    "find_relations",
    "gen_count",
    "gen_sequence",
    "get_family",
    "get_registry",
    "graded_dim",
    "make_report",
    "rank",
    "rank_kernel",
    "rational_coefficients",
    "sparse_rank",
    "table_rows",
    "to_csv",
    "to_latex",
    "to_text",
]
