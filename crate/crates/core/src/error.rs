use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("number field error: {0}")]
    Field(String),
    #[error("eigenvalue field of degree {degree} would be required (factor {factor})")]
    UnsplitEigenvalueFactor { degree: usize, factor: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unknown catalog name `{0}`")]
    UnknownCatalog(String),
    #[error("voltage assignment is not antisymmetric on edge {0}-{1}")]
    VoltageNotAntisymmetric(usize, usize),
    #[error("search guard exceeded: {n} points > limit {limit}")]
    GuardExceeded { n: usize, limit: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("relation {0} is not connected")]
    RelationDisconnected(usize),
    #[error("configuration is not homogeneous ({0} diagonal colors)")]
    NotHomogeneous(usize),
    #[error("color {0} is not symmetric")]
    NotSymmetric(usize),
    #[error("not a valid association scheme: {0}")]
    AxiomViolation(String),
    #[error("relation union is not an equivalence relation: {0}")]
    NotEquivalence(String),
    #[error("group element {0} is not a permutation of the points")]
    NotPermutation(usize),
    #[error("part sizes sum to {got}, relation valency is {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("eigenvalue {0} of the intersection matrix is repeated")]
    RepeatedEigenvalue(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("internal verification failed: {0}")]
    Verification(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
