"""Numerics for bivariate symmetric homogeneous means through their
Seiffert-function representatives: the bijection, a sup metric, a gauge
group, the log-averaging integral operator and its iterated families,
Schur-convexity classification, invariant (compound) means, and two
optimal-bound solvers, plus an expression grammar and CLI on top."""

from ._kernels import BACKEND
from .algebra import (
    ARTANH_GAUGE,
    Gauge,
    ShiftedMean,
    a_inverse,
    a_transform,
    mean_reflect,
    oplus,
    oplus_mean,
    seiffert_negate,
    shift_mean,
    shift_seiffert,
)
from .analysis import (
    ComparisonVerdict,
    CORPUS_NAMES,
    MeanOrderError,
    SchurVerdict,
    combine_half_square,
    combine_power,
    compare,
    harmonic_weighted_dual,
    schur_classify,
    verify_corpus,
)
from .bounds import (
    BoundResult,
    check_convex_soundness,
    check_shift_soundness,
    convex_combination_bounds,
    hat_inverse,
    shift_bounds,
)
from .cheb import PiecewiseCheb, QuadratureError
from .core import (
    MEANS,
    SEIFFERT_FUNCTIONS,
    BandViolation,
    Mean,
    SeiffertFunction,
    band_high,
    band_low,
    gini,
    mean_from_seiffert,
    power_mean,
    roundtrip_check,
    seiffert_from_mean,
    validate_mean,
    validate_seiffert,
)
from .grammar import (
    ElaborationError,
    ParseError,
    elaborate_mean,
    elaborate_seiffert,
    mean_expr,
    parse,
    seiffert_expr,
    to_source,
)
from .invariant import (
    ContractionError,
    ConvergenceError,
    FunctionalSolve,
    InvariantSolveConfig,
    compound_trace,
    functional_invariant,
    invariant_mean,
)
from .metric import MetricResult, mean_distance, seiffert_distance
from .report import CheckRecord, VerificationReport
from .series import (
    COROLLARY_FUNCTIONS,
    RULES,
    SeriesSpec,
    SeriesSpecError,
    build_series_seiffert,
    classify_series,
)
from .transform import (
    FAMILY_BASES,
    FAMILY_SHAPES,
    MAX_DEPTH,
    DepthLimitError,
    family_member,
    integral_transform,
)

__version__ = "0.1.0"
