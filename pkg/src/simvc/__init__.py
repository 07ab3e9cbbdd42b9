"""Exact-computation toolkit for VC dimensions of similarity hypothesis spaces."""

from .bounds import (
    DELTA,
    BoundConstants,
    EntropySumCheck,
    SauerQuery,
    binary_entropy,
    binom_partial_sum,
    entropy_sum_holds,
    sauer_guaranteed_vc,
    solve_optimal_delta,
    theorem_bounds,
    urner_bound,
)
from .engine import ORACLE_DOMAIN_CAP, VcResult, shattered_level, vc_exact, vc_naive
from .errors import (
    DomainTooLargeError,
    DomainTooLargeForEnumerationError,
    DomainTooLargeForOracleError,
    DuplicateElementsError,
    EmptySpaceError,
    IndexOutOfRangeError,
    InvalidParamsError,
    InvalidQueryError,
    InvalidSpecError,
    LengthMismatchError,
    NotAForestError,
    OutOfRangeError,
    PairDomainEmptyError,
    SimvcError,
    SubsetTooLargeError,
)
from .experiments import (
    CSV_COLUMNS,
    BoundReport,
    RatioSearchResult,
    iter_reports,
    ratio_search,
    run_report,
    verify_theorem,
)
from .families import (
    ENUMERATION_CAP,
    FamilySpec,
    enumerate_spaces,
    full_cube,
    k_sparse,
    random_space,
    random_space_stream,
    spaces_for,
    splitmix64_stream,
)
from .similarity import (
    ComponentPartition,
    ForestCheck,
    PairDomain,
    balanced_labelling,
    canonical_pairs,
    chain_pairs,
    chain_witness,
    components,
    endpoints,
    forest_filter,
    is_forest,
    lift_hypothesis,
    lift_space,
    lift_space_ordered,
    pair_domain,
)
from .space import (
    DOMAIN_SIZE_CAP,
    LOAD_DOMAIN_SIZE_CAP,
    PATTERN_BITS_CAP,
    Hypothesis,
    HypothesisSpace,
    MissingPattern,
    ShatterWitness,
    is_shattered,
    make_space,
    pattern_count,
    restrict,
    space_from_dict,
    space_to_dict,
)

__version__ = "0.1.0"

__all__ = [
    "BoundConstants",
    "BoundReport",
    "ComponentPartition",
    "CSV_COLUMNS",
    "DELTA",
    "DOMAIN_SIZE_CAP",
    "DomainTooLargeError",
    "DomainTooLargeForEnumerationError",
    "DomainTooLargeForOracleError",
    "DuplicateElementsError",
    "EmptySpaceError",
    "ENUMERATION_CAP",
    "EntropySumCheck",
    "FamilySpec",
    "ForestCheck",
    "Hypothesis",
    "HypothesisSpace",
    "IndexOutOfRangeError",
    "InvalidParamsError",
    "InvalidQueryError",
    "InvalidSpecError",
    "LengthMismatchError",
    "LOAD_DOMAIN_SIZE_CAP",
    "MissingPattern",
    "NotAForestError",
    "ORACLE_DOMAIN_CAP",
    "OutOfRangeError",
    "PairDomain",
    "PairDomainEmptyError",
    "PATTERN_BITS_CAP",
    "RatioSearchResult",
    "SauerQuery",
    "ShatterWitness",
    "SimvcError",
    "SubsetTooLargeError",
    "VcResult",
    "balanced_labelling",
    "binary_entropy",
    "binom_partial_sum",
    "canonical_pairs",
    "chain_pairs",
    "chain_witness",
    "components",
    "endpoints",
    "entropy_sum_holds",
    "enumerate_spaces",
    "forest_filter",
    "full_cube",
    "is_forest",
    "is_shattered",
    "iter_reports",
    "k_sparse",
    "lift_hypothesis",
    "lift_space",
    "lift_space_ordered",
    "make_space",
    "pair_domain",
    "pattern_count",
    "random_space",
    "random_space_stream",
    "ratio_search",
    "restrict",
    "run_report",
    "sauer_guaranteed_vc",
    "shattered_level",
    "solve_optimal_delta",
    "space_from_dict",
    "space_to_dict",
    "spaces_for",
    "splitmix64_stream",
    "theorem_bounds",
    "urner_bound",
    "vc_exact",
    "vc_naive",
    "verify_theorem",
]
