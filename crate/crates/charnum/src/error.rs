use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition not of weight {expected} (got weight {got})")]
    WeightMismatch { expected: u32, got: u32 },

    #[error("partition parts must be positive")]
    ZeroPart,

    #[error("exp requires zero constant term")]
    ExpNonzeroConstant,

    #[error("inverse requires unit constant term")]
    InverseNonUnitConstant,

    #[error("not a normalized characteristic series")]
    NotNormalizedSeries,

    #[error("series truncation order {trunc} is below the requested degree {degree}")]
    TruncationTooSmall { trunc: usize, degree: usize },

    #[error("input not symmetric")]
    NotSymmetric,

    #[error("exponent vector length {got} does not match arity {arity}")]
    ArityMismatch { arity: usize, got: usize },

    #[error("no degree-0 Chern number")]
    DegreeZeroChernNumber,

    #[error("Pontryagin class exceeds truncation degree (2*{index} > {trunc})")]
    PontryaginExceedsTruncation { index: u32, trunc: u32 },

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: u32, got: u32 },

    #[error("dimension mismatch: expected ambient {expected}, got {got}")]
    AmbientMismatch { expected: usize, got: usize },

    #[error("index p = {p} out of range 0..={max}")]
    IndexOutOfRange { p: u32, max: u32 },

    #[error("malformed manifold expression: {0}")]
    ParseManifold(String),

    #[error("malformed rational: {0}")]
    ParseRational(String),

    #[error("malformed partition: {0}")]
    ParsePartition(String),
}
