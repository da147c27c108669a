"""Binary linear complementary pairs of codes.

Construct coordinate permutations that drive the intersection of a code
pair to any feasible dimension (zero giving a complementary pair), build
Griesmer-optimal pairs from punctured repeated simplex codes, and verify
the small-parameter security-parameter landscape by exhaustive enumeration.
"""

from .gf2 import (
    BitMatrix,
    DimensionMismatch,
    MatrixFormatError,
    Permutation,
    apply_permutation,
    compose,
    format_matrix_text,
    identity_permutation,
    inverse,
    multiply,
    parse_matrix_text,
    rank,
    rref,
    transpose,
    transposition,
)
from .codes import (
    LinearCode,
    WeightDistribution,
    contains_all_one,
    dual,
    from_generator,
    hull,
    intersection,
    intersection_dim_via_rank,
    is_even_like,
    min_distance,
    permute,
    security_parameter,
    sum_code,
    weight_distribution,
    zero_extend,
)
from .lcp import (
    ConditionViolated,
    LcpCertificate,
    ReductionStep,
    UnequalDimensions,
    build_lcp,
    build_lcp_padded,
    ell_pair,
    exists_permutation_oracle,
    format_certificate,
    hull_shift_pair,
    parse_certificate,
    verify_certificate,
)
from .constructions import (
    SolomonStifflerSpec,
    belov_condition,
    decompose_deficiency,
    griesmer_bound,
    reed_muller_1,
    repeated_simplex,
    simplex_matrix,
    solomon_stiffler_code,
    solomon_stiffler_spec,
    ss_lcp,
)
from .search import (
    DlTable,
    best_distance,
    d_lcp_exact_tiny,
    enumerate_subspaces,
    gaussian_binomial,
    guenda_conjecture_check,
    lcp_security_search,
    optimal_codes_report,
)

__version__ = "0.1.0"
