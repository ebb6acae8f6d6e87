//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix size n={0} is too small (need n >= {1})")]
    MatrixTooSmall(usize, usize),
    #[error("matrix size n={0} exceeds the supported desk scale (n <= {1})")]
    MatrixTooLarge(usize, usize),
    #[error("minor size t={t} out of range 2..={n}")]
    MinorSizeOutOfRange { n: usize, t: usize },
    #[error("row and column selections differ in length ({rows} vs {cols})")]
    LengthMismatch { rows: usize, cols: usize },
    #[error("empty index selection")]
    EmptySelection,
    #[error("repeated {axis} index {index} in minor selection")]
    RepeatedIndex { axis: &'static str, index: usize },
    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid tail: expected a permutation of the off-band variables")]
    InvalidTailOrder,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("generator #{index} is zero")]
    ZeroGenerator { index: usize },
    #[error("generator #{index} is not homogeneous")]
    InhomogeneousGenerator { index: usize },
    #[error("monomial ideal is not square-free")]
    NotSquareFree,
    #[error("support of size {support} exceeds the exhaustive-enumeration guard ({limit})")]
    SupportTooLarge { support: usize, limit: usize },
    #[error("{count} candidate monomials have no witnessing minor (first: {first})")]
    MissingWitness { count: usize, first: String },
    #[error("matching size r={r} must satisfy 1 <= r < m/2 for m={m}")]
    MatchingSizeOutOfRange { m: usize, r: usize },
    #[error("cyclic polytope dimension d={d} must be even with 0 < d < m={m}")]
    CyclicDimensionInvalid { m: usize, d: usize },
    #[error("verification requires n >= 5 (the minor size n-2 must be at least 3); got n={0}")]
    VerificationSizeTooSmall(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
