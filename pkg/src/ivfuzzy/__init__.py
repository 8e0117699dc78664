"""Interval-valued fuzzy filters of finite pseudo BL-algebras.

Exact interval arithmetic on ``[0,1]``, table-defined pseudo BL-algebras,
dichotomous interval-valued fuzzy sets, the filter predicates built on
them, implication-based filters, and an exhaustive sweep harness that
checks the characterization theorems at small scale.
"""

from .algebra import (
    FinitePseudoBL,
    InvalidAlgebra,
    MalformedTables,
    ValidationReport,
    check_derived_properties,
    direct_product,
    enumerate_filters,
    godel_chain,
    is_filter,
    is_g_filter,
    is_implicative_filter,
    is_mv_filter,
    lukasiewicz_chain,
    validate,
)
from .filters import (
    FilterVerdict,
    arrows_agree,
    check_implicative_consequences,
    is_fuzzy_filter_scalar,
    is_fuzzy_implicative_filter_scalar,
    is_iv_evq_fuzzy_filter,
    is_iv_evq_fuzzy_filter_pointwise,
    is_iv_evq_g_filter,
    is_iv_evq_implicative_filter,
    is_iv_evq_mv_filter,
    is_iv_fuzzy_filter,
    is_threshold_fuzzy_filter,
    is_threshold_implicative_filter,
    satisfies_F7_F8,
    satisfies_F9_F10,
    satisfies_F14,
)
from .fuzzy import (
    FuzzyPoint,
    IVFuzzySet,
    belongs,
    critical_thresholds,
    dichotomous_intervals,
    enumerate_iv_fuzzy_sets,
    in_and_q,
    in_or_q,
    level_set,
    level_sets,
    quasi_coincident,
)
from .harness import SweepConfig, VerificationResult, search_problem_4, verify_all, verify_theorem
from .implication import (
    ImplicationOperator,
    implication_threshold_agreement,
    is_fuzzifying_implicative_filter,
    is_t_implication_based_implicative_filter,
    truth_value,
)
from .interval import IntervalNumber, add, complement, exceeds_one, leq, rinf, rmax, rmin, rsup, scalar_scale

__version__ = "0.1.0"
