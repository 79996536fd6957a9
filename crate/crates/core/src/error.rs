use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("zero polynomial has no normal form")]
    ZeroPolynomial,
    #[error("matrix entries do not share one coefficient structure")]
    MixedCoefficients,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("degree {k} out of range 0..={n}")]
    DegreeOutOfRange { k: usize, n: usize },
    #[error("monodromy is not unimodular (det = {0})")]
    NotUnimodular(String),
    #[error("twist mode unavailable: {0}")]
    ModeUnavailable(String),
    #[error("coboundaries do not compose to zero in degree {0}")]
    NotAComplex(usize),
    #[error("twisting form is not closed")]
    ThetaNotClosed,
    #[error("form degree {0} exceeds the chart dimension")]
    DegreeOverflow(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
