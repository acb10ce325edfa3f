//! Error type shared by the whole crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building parameter objects or asking
/// for a value outside a function's domain.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Pair arguments must be finite, positive and distinct.
    #[error("invalid pair ({a}, {b}): need finite, positive, distinct entries")]
    InvalidPair { a: f64, b: f64 },

    /// Exponent triples must be finite and nonzero with `s < t`.
    #[error("invalid exponents (s={s}, t={t}, p={p}): need finite nonzero values with s < t")]
    InvalidExponents { s: f64, t: f64, p: f64 },

    /// Four-exponent parameter sets must satisfy `0 < s < t < r` and `p > 0`.
    #[error("invalid exponents (r={r}, s={s}, t={t}, p={p}): need 0 < s < t < r and p > 0")]
    InvalidQuad { r: f64, s: f64, t: f64, p: f64 },

    /// Kernel triples must have pairwise distinct magnitudes.
    #[error(
        "degenerate kernel triple ({alpha}, {beta}, {gamma}): magnitudes must be pairwise distinct"
    )]
    DegenerateTriple { alpha: f64, beta: f64, gamma: f64 },

    /// The classification plane excludes `r` in {0, 1} and `q = 0`.
    #[error("excluded plane point (r={r}, q={q}): r must avoid 0 and 1, q must be nonzero")]
    ExcludedPoint { r: f64, q: f64 },

    /// Evaluation abscissae must be finite and positive.
    #[error("invalid evaluation point x={x}: need finite x > 0")]
    InvalidEvalPoint { x: f64 },

    /// The sinh-excess ratio degenerates at these orders.
    #[error("excluded ratio order r={r}: r must avoid -1, 0, 1/2, 1 and 2")]
    ExcludedRatioOrder { r: f64 },

    /// Expansion coefficients are defined from index 2 on.
    #[error("coefficient index n={n}: need n >= 2")]
    CoefficientIndex { n: u32 },

    /// A scalar argument failed a documented requirement.
    #[error("invalid argument {name}={value}: must be {requirement}")]
    InvalidArgument {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    /// The requested parameters fall outside every covered bound branch.
    #[error("not covered: {reason}")]
    NotCovered { reason: String },

    /// A sweep or search configuration is unusable.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
