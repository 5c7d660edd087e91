use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at {point}: denominator factor {factor} vanishes")]
    Pole { point: String, factor: String },
    #[error("cannot specialise q = {0}: the value has no rational square root and the scalar has odd powers of s")]
    NotASquare(String),
    #[error("rewrite step budget of {0} exhausted; the rule set does not terminate on this input")]
    StepBudget(usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("unsupported triple {0}: quantum-sector symbols are certified by bracket_adjoint_consistency")]
    UnsupportedTriple(String),
    #[error("no realization of {0} as an algebra element")]
    RealizationUnavailable(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("no 3-dimensional ad-invariant subspace at degree {0}; try a larger --max-degree")]
    NoInvariantSubspace(usize),
    #[error("unsupported term: {0}")]
    UnsupportedTerm(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
