use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in the prime field")]
    DivisionByZero,
    #[error("homogeneity violation: {0}")]
    HomogeneityViolation(String),
    #[error("module has infinite length: {0}")]
    InfiniteLength(String),
    #[error("Hilbert-Samuel function did not stabilize within n <= {cap}")]
    NoStabilization { cap: usize },
    #[error("cross-check failure: {0}")]
    CrossCheckFailure(String),
    #[error("index {index} out of range {range}")]
    IndexOutOfRange { index: usize, range: String },
    #[error("module is not generalized Cohen-Macaulay: {0}")]
    NotGeneralizedCM(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("no d-sequence generating set found within a budget of {budget} attempts")]
    NotFoundWithinBudget { budget: usize },
    #[error("equivalence violation: {0}")]
    EquivalenceViolation(String),
    #[error("no standard grading for the idealization: {0}")]
    NonStandardGrading(String),
    #[error("operation requires a nonzero module")]
    ZeroModule,
    #[error("random instance generation failed after {attempts} attempts")]
    GenerationFailure { attempts: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
