use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TangleError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("parity violation: intersection numbers {0:?} have odd total")]
    Parity([u64; 3]),
    #[error("arcs {0} and {1} intersect")]
    Intersecting(String, String),
    #[error("step budget of {0} exhausted")]
    StepBudget(usize),
    #[error("invariant violated: {0}")]
    PaperViolation(String),
    #[error("unsupported schema version {0:?}")]
    Schema(String),
}

pub type Result<T, E = TangleError> = std::result::Result<T, E>;
