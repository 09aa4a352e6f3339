use thiserror::Error;

/// Errors raised by set construction, operators, inference and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error("membership out of range: {value} at index {index} is not in [0, 1]")]
    MembershipOutOfRange { index: usize, value: f64 },

    #[error("degree out of range: {0} is not in [0, 1]")]
    DegreeOutOfRange(f64),

    #[error("fuzzy set must have at least one element")]
    EmptyUniverse,

    #[error("universe mismatch: expected {expected} elements, got {found}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("hedge exponent must be positive, got {0}")]
    NonPositiveExponent(f64),

    #[error("case {0} needs an explicit slightly tilted premise/target pair")]
    MissingTilted(u8),

    #[error("unknown case id {0} (expected 1..=10)")]
    UnknownCase(u8),

    #[error("cannot aggregate an empty list of scores")]
    EmptyAggregate,

    #[error("no conclusions to combine")]
    NoConclusions,
}

pub type Result<T> = std::result::Result<T, FuzzyError>;
