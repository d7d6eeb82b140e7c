use thiserror::Error;

/// Errors raised by constructors and checked operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid grading: {0}")]
    InvalidGrading(String),

    #[error("weight window [{lo}, {hi}] too narrow: weights [{need_lo}, {need_hi}] are required")]
    InsufficientWindow { lo: i64, hi: i64, need_lo: i64, need_hi: i64 },

    #[error("not a cocycle: {0}")]
    NotCocycle(String),

    #[error("not a subspace: {0}")]
    NotSubspace(String),

    #[error("not equivariant: {0}")]
    NotEquivariant(String),

    #[error("H^0 is nonzero (dimension {0})")]
    NonzeroInvariants(usize),

    #[error("classification not implemented for this case: {0}")]
    ClassificationUnsupported(String),

    #[error("search inconclusive: {0}")]
    Inconclusive(String),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
