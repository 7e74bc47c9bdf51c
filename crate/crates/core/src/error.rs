use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group closure exceeds the element cap of {cap}")]
    ElementCap { cap: usize },

    #[error("no generators given")]
    NoGenerators,

    #[error("generators act on different point counts ({expected} vs {found})")]
    PointCountMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("element {0} is not in the group")]
    UnknownElement(String),

    #[error("not a homomorphism: f({left} * {right}) != f({left}) * f({right})")]
    NotHomomorphism { left: String, right: String },

    #[error("operands belong to different groups")]
    GroupMismatch,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,

    #[error("polynomial degree {degree} exceeds the factorization bound {bound}")]
    UnsupportedDegree { degree: usize, bound: usize },

    #[error("integer {0} is too large to enumerate divisors")]
    IntegerTooLarge(String),

    #[error("factorization search exceeds its budget: {0}")]
    FactorBudget(String),

    #[error("element is not in the span of the hat basis: coefficient of {0} violates g = -g^-1 symmetry")]
    NotInSpan(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}
