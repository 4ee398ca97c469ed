"""Bounds for j-wise Davenport constants of elementary 2-groups.

Exact brute-force oracles at small rank, coding-theory rate bounds driving a
recursion for asymptotic upper coefficients, and an exact counting argument
for lower bounds, cross-validated against each other.
"""

from .counting import (
    RatioReport,
    gaussian_binomial,
    inadmissible_ratio,
    lower_bound_coefficient,
    lower_bound_exact,
    subspaces_containing,
)
from .errors import BracketError, ComputationError, ParameterError, SearchBudgetError
from .gf2 import (
    INFINITE_DISTANCE,
    CodeParams,
    GF2Matrix,
    GroupElement,
    code_params,
    min_distance,
    min_zero_sum_length,
    random_parity_matrix,
    rank,
)
from .oracle import (
    DecompositionReport,
    OracleResult,
    Sequence,
    bounded_constant_exact,
    davenport_exact,
    max_disjoint_zero_sums,
    next_davenport_upper,
)
from .ratebounds import EVAL_TOLERANCE, RateBoundKind, entropy, evaluate, root_entropy
from .recursion import (
    CoefficientRow,
    CoefficientTable,
    GroupBoundReport,
    ProfileDecade,
    ProfileReport,
    Schedule,
    asymptotic_profile,
    coefficient_sequence,
    increment_residual,
    mixed_group_bound,
    schedule_preset,
    solve_increment,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BracketError",
    "ComputationError",
    "ParameterError",
    "SearchBudgetError",
    "INFINITE_DISTANCE",
    "CodeParams",
    "GF2Matrix",
    "GroupElement",
    "code_params",
    "min_distance",
    "min_zero_sum_length",
    "random_parity_matrix",
    "rank",
    "DecompositionReport",
    "OracleResult",
    "Sequence",
    "bounded_constant_exact",
    "davenport_exact",
    "max_disjoint_zero_sums",
    "next_davenport_upper",
    "EVAL_TOLERANCE",
    "RateBoundKind",
    "entropy",
    "evaluate",
    "root_entropy",
    "CoefficientRow",
    "CoefficientTable",
    "GroupBoundReport",
    "ProfileDecade",
    "ProfileReport",
    "Schedule",
    "asymptotic_profile",
    "coefficient_sequence",
    "increment_residual",
    "mixed_group_bound",
    "schedule_preset",
    "solve_increment",
    "RatioReport",
    "gaussian_binomial",
    "inadmissible_ratio",
    "lower_bound_coefficient",
    "lower_bound_exact",
    "subspaces_containing",
]
