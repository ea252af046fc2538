use thiserror::Error;

/// Errors raised by the algebra and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("variable count {0} outside 1..=16")]
    VariableCount(usize),
    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("degree {k} exceeds variable count {n}")]
    DegreeTooLarge { k: usize, n: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("zero pivot")]
    ZeroPivot,
    #[error("singular matrix")]
    Singular,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not real-rooted")]
    NotRealRooted,
    #[error("restriction to {size} of {n} indices is undefined for degree {degree}")]
    UndefinedRestriction { size: usize, n: usize, degree: usize },
    #[error("degenerate direction: polynomial vanishes at the direction vector")]
    DegenerateDirection,
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("product is not multiaffine (shared variable {0})")]
    NotMultiaffine(usize),
    #[error("point is outside the hyperbolicity cone (min root {min_root:e})")]
    OutsideCone { min_root: f64 },
    #[error("incompatible variable orderings: {0}")]
    VariableOrder(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
