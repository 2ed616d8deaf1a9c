use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("coefficients live in different number fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("defining polynomial is not monic with integer coefficients: {0}")]
    NotMonicIntegral(String),
    #[error("defining polynomial is reducible over the rationals: {0}")]
    Reducible(String),
    #[error("valuation of zero requested")]
    ZeroValuation,
    #[error("extension of the {0}-adic valuation is not certified unique in this field")]
    NotUniquelyExtended(u64),
    #[error("series widths differ ({0} vs {1})")]
    WidthMismatch(u32, u32),
    #[error("series is identically zero to its truncation")]
    ZeroSeries,
    #[error("series is not normalized to 1 + O(w): {0}")]
    NotNormalized(String),
    #[error("width {width} cannot represent the eta quotient: {reason}")]
    IncompatibleWidth { width: u32, reason: String },
    #[error("invalid eta quotient: {0}")]
    InvalidEtaQuotient(String),
    #[error("singular curve (zero discriminant)")]
    SingularCurve,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point is not {0}-torsion")]
    NotTorsion(u64),
    #[error("unsupported torsion order {0}")]
    UnsupportedTorsion(u64),
    #[error("unexpected torsion structure: {0}")]
    TorsionStructure(String),
    #[error("local expansion needs more than {0} terms")]
    LocalPrecision(usize),
    #[error("truncation shortfall: asked for {wanted} terms, only {available} available")]
    TruncationShortfall { wanted: usize, available: usize },
    #[error("expansion relations inconsistent at exponent {0}")]
    Inconsistent(i64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
