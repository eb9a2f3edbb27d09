use thiserror::Error;

use crate::algebra::Algebra;
use crate::notation::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch { left: Algebra, right: Algebra },
    #[error("expected {expected} coefficients, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("coefficient {index} is not in the scalar field of {algebra}")]
    FieldMismatch { algebra: Algebra, index: usize },
    #[error("element has zero norm and is not invertible")]
    NotInvertible,
    #[error("element must be nonzero")]
    ZeroElement,
    #[error("element must be pure imaginary")]
    NotPure,
    #[error("norms differ: N(a) = {left}, N(b) = {right}")]
    NormMismatch { left: String, right: String },
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("{0} is not a quaternion algebra")]
    NotQuaternion(Algebra),
    /// A computed identity failed. Always a bug in a table or a construction.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    /// True for failures that indicate a defect rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistent(_))
    }
}
