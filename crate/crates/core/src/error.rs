use std::fmt;

use thiserror::Error;

use crate::algebra::AlgebraTag;

pub type Result<T> = std::result::Result<T, Error>;

/// Why a candidate matrix was refused as a root of −1.
#[derive(Debug, Clone, PartialEq)]
pub enum RootRejection {
    NotSquare {
        rows: usize,
        cols: usize,
    },
    Empty,
    /// A real matrix of odd order cannot square to −I: det(J)² = det(−I) = −1.
    OddDimensionReal {
        n: usize,
    },
    Residual {
        residual: f64,
        tol: f64,
    },
}

impl fmt::Display for RootRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Self::Empty => write!(f, "matrix is empty"),
            Self::OddDimensionReal { n } => write!(
                f,
                "no real {n}x{n} root of -1 exists for odd n: det(J)^2 = det(-I) = -1 has no real solution"
            ),
            Self::Residual { residual, tol } => write!(
                f,
                "not a root of -1: max|J*J + I| = {residual:e} exceeds tolerance {tol:e}"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch { left: AlgebraTag, right: AlgebraTag },

    #[error("{algebra} values have {expected} coefficients, got {got}")]
    CoefficientCount {
        algebra: AlgebraTag,
        expected: usize,
        got: usize,
    },

    #[error("{0} coefficients must be real")]
    ComplexCoefficients(AlgebraTag),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not in the image of the {algebra} representation (residual {residual:e})")]
    NotInImage { algebra: AlgebraTag, residual: f64 },

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("{0}")]
    NotARoot(RootRejection),

    #[error("transmutation requires a 4x4 quaternion root: {0}")]
    Transmute(String),

    #[error("invalid signal: {0}")]
    Signal(String),

    #[error("power series did not converge within {terms} terms")]
    NonConvergence { terms: usize },

    #[error("degenerate path: {0}")]
    Degenerate(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("malformed root file: {0}")]
    RootFormat(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<RootRejection> for Error {
    fn from(r: RootRejection) -> Self {
        Error::NotARoot(r)
    }
}
