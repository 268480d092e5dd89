"""Exact tools for orthogonal arrays and block designs.

The package bundles four kinds of operations:

* construction and verification of orthogonal arrays and 2-designs,
  with exact strength checking and a plain text interchange format;
* existence bounds (minimum index, minimum rows, maximum row
  multiplicity) evaluated in exact rational arithmetic;
* audit certificates that re-derive the bounds from an explicit array
  through independent proof techniques (variance counting, incidence
  ranks, Gram determinants, root-of-unity vectors, constant-weight
  codes) and report every intermediate check;
* a canonical backtracking search that decides existence of small
  arrays with a prescribed repeated row, plus an exact oracle for the
  maximum achievable row multiplicity.
"""

from .arrays import (
    BlockDesign,
    MultiplicityReport,
    OrthogonalArray,
    block_multiplicities,
    format_bibd,
    format_oa,
    normalize_to_row,
    parse_bibd,
    parse_oa,
    row_multiplicities,
    stack,
    strength_lambda,
    symbol_counts,
    verify_bibd,
)
from .bounds import (
    BoundResult,
    DesignParameters,
    OAParameters,
    bibd_bounds,
    equality_abar,
    johnson_R,
    max_multiplicity,
    mqw_min_rows,
    oa_to_cwc_params,
    pb_min_lambda,
    rao_min_rows,
    rr_min_lambda,
)
from .certificates import (
    AuditReport,
    Check,
    ConstantWeightCodeFamily,
    IncidenceMatrix,
    RootCountVector,
    RootVectorFamily,
    TransversalDesign,
    VarianceAudit,
    check_span_equations,
    cwc_certificate,
    extract_cwc,
    gram_certificate,
    incidence_matrix,
    orthogonality_certificate,
    rank_bound_certificate,
    root_vector_family,
    shortened_family_certificate,
    to_transversal_design,
    variance_audit,
)
from .cyclotomic import (
    cyclotomic,
    reduce_root_sum,
    root_sum_float,
    root_sum_is_zero,
)
from .errors import (
    AuditFailure,
    BudgetExceeded,
    CeilingExceeded,
    EquationViolated,
    FormatError,
    HypothesisViolated,
    IdentityViolated,
    InnerProductMismatch,
    LemmaViolated,
    NonintegralIndex,
    NonOrthogonal,
    NonpositiveDeterminant,
    NotADesign,
    NotAnOA,
    OakitError,
    RankDeficient,
    UnsupportedParameters,
    WeightMismatch,
)
from .linalg import integer_det, integer_rank
from .search import (
    DEFAULT_CEILING,
    SearchProblem,
    SearchResult,
    generate_linear_oa,
    oracle_max_multiplicity,
    search_oa,
)

__version__ = "0.1.0"

__all__ = [
    "AuditFailure",
    "AuditReport",
    "BlockDesign",
    "BoundResult",
    "BudgetExceeded",
    "CeilingExceeded",
    "Check",
    "ConstantWeightCodeFamily",
    "DEFAULT_CEILING",
    "DesignParameters",
    "EquationViolated",
    "FormatError",
    "HypothesisViolated",
    "IdentityViolated",
    "IncidenceMatrix",
    "InnerProductMismatch",
    "LemmaViolated",
    "MultiplicityReport",
    "NonOrthogonal",
    "NonintegralIndex",
    "NonpositiveDeterminant",
    "NotADesign",
    "NotAnOA",
    "OAParameters",
    "OakitError",
    "OrthogonalArray",
    "RankDeficient",
    "RootCountVector",
    "RootVectorFamily",
    "SearchProblem",
    "SearchResult",
    "TransversalDesign",
    "UnsupportedParameters",
    "VarianceAudit",
    "WeightMismatch",
    "bibd_bounds",
    "block_multiplicities",
    "check_span_equations",
    "cwc_certificate",
    "cyclotomic",
    "equality_abar",
    "extract_cwc",
    "format_bibd",
    "format_oa",
    "generate_linear_oa",
    "gram_certificate",
    "incidence_matrix",
    "integer_det",
    "integer_rank",
    "johnson_R",
    "max_multiplicity",
    "mqw_min_rows",
    "normalize_to_row",
    "oa_to_cwc_params",
    "oracle_max_multiplicity",
    "orthogonality_certificate",
    "parse_bibd",
    "parse_oa",
    "pb_min_lambda",
    "rank_bound_certificate",
    "rao_min_rows",
    "reduce_root_sum",
    "root_sum_float",
    "root_sum_is_zero",
    "root_vector_family",
    "row_multiplicities",
    "rr_min_lambda",
    "search_oa",
    "shortened_family_certificate",
    "stack",
    "strength_lambda",
    "symbol_counts",
    "to_transversal_design",
    "variance_audit",
    "verify_bibd",
]
