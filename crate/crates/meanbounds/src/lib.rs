//! Two-sided bounds, monotonicity classification and verification sweeps
//! for ratios that compare the gaps between two-argument means.
//!
//! For a pair of positive numbers, means such as the geometric, power and
//! identric means differ by gaps that shrink together as the arguments
//! approach each other. This crate works with ratios of two such gaps,
//! each mean raised to a common power. The central objects are:
//!
//! * [`means`]: validated argument pairs and exponent sets, the means
//!   themselves, and the gap ratios built from them.
//! * [`kernels`]: the even one-variable kernels those ratios reduce to on
//!   the unit-product slice, along with the derivative-comparison and
//!   curvature machinery that decides how the ratios move.
//! * [`regions`]: exact classification of the kernel parameter plane into
//!   increasing, decreasing, constant and non-monotone regions, the case
//!   map for covered exponent choices, and applicability predicates.
//! * [`bounds`]: the two-sided enclosures those cases produce, with
//!   endpoint sharpness metadata and witness pairs approaching each end.
//! * [`search`] and [`verify`]: empirical extrema over an abscissa range,
//!   and seeded sweep harnesses that check containment, monotonicity,
//!   difference-quotient transfer and threshold claims.
//! * [`suites`]: named bundles of those sweeps used by the command-line
//!   tool and the acceptance tests.
//!
//! Everything is deterministic given a seed, and every numeric routine is
//! written to survive the extreme abscissae the sweeps visit (log-domain
//! evaluation, series fallbacks near zero, signed-log arithmetic past the
//! overflow threshold).

pub mod bounds;
pub mod error;
pub mod kernels;
pub mod means;
pub mod regions;
pub mod search;
pub mod stable;
pub mod suites;
pub mod verify;

pub use bounds::{
    far_endpoint, gap_ratio_bounds, general_ratio_bounds, limit_witnesses, limit_witnesses_at,
    unit_power_bounds, BoundPair, WITNESS_LOG_CAP, WITNESS_LOG_GAP,
};
pub use error::{Error, Result};
pub use kernels::{
    cosh_gap_quotient, curvature_coefficient, curvature_ratio, curvature_ratio_dt,
    curvature_threshold, gap_ratio, gap_ratio_limits, gap_slope_kernel, gap_slope_quotient,
    mean_growth, mean_growth_dx, monotonicity_direction, sinh_excess, sinh_excess_ratio, EvalPoint,
    KernelTriple, RQPoint, EXCLUDED_RATIO_ORDERS,
};
pub use means::{
    identric_gap_ratio, identric_mean, mean_gap_ratio, mean_gap_ratio_general, power_mean,
    ExponentTriple, PositivePair, QuadExponents,
};
pub use regions::{
    admissible_t_range, bound_case, classification_rule, classify_gap_ratio,
    classify_slope_quotient, general_ratio_applicable, unit_power_case, AdmissibleRange, BoundCase,
    CaseTag, MonotonicityClass, UnitPowerCase, CONSTANT_POINTS,
};
pub use search::{empirical_extrema, ExtremaResult, SearchConfig};
pub use suites::{
    sample_applicable_quads, sample_covered_triples, sample_plane_points, sample_unit_exponents,
    suite_admissible, suite_alzer_qiu, suite_gap_ratio, suite_general_ratio, suite_kouba,
    suite_quotient_rule, suite_regions, suite_sharpness, suite_trif, suite_unit_power,
    suite_wu_debnath, SuiteOutcome, SuiteSummary,
};
pub use verify::{
    verify_admissible_boundary, verify_containment, verify_monotone, verify_quotient_rule,
    AdmissibleBoundaryReport, QuotientRuleOutcome, SampleConfig, VerificationReport, DEFAULT_SEED,
};
