use thiserror::Error;

pub type Result<T> = std::result::Result<T, HahnError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HahnError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("recurrence coefficient A_{degree} vanished")]
    DegenerateRecurrence { degree: usize },
    #[error("denominator Pochhammer factor vanishes at k = {index}")]
    ZeroDenominator { index: usize },
    #[error("series does not terminate: leading numerator parameter {0} is not a nonpositive integer")]
    NonTerminating(f64),
    #[error("grid function too short: {len} points")]
    TooShort { len: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("degenerate interval [{a}, {b}]")]
    DegenerateInterval { a: f64, b: f64 },
    #[error("eigenvalue of degree 0 is zero; no decay bound for k = {k}")]
    ZeroLambda { k: u32 },
    #[error("Newton iteration did not converge for a {points}-point rule")]
    ConvergenceFailure { points: usize },
}
