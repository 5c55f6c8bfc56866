use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("weight vector is trivial (all entries zero)")]
    TrivialSubgroup,

    #[error("block {block} of the weight vector sums to {sum}, expected 0")]
    NonZeroBlockSum { block: usize, sum: String },

    #[error("support is empty")]
    EmptySupport,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point set is empty")]
    EmptyPointSet,

    #[error("functional does not vanish at the centroid (value {0})")]
    NotCentred(String),

    #[error("families have different signatures")]
    MixedSignatures,

    #[error("monomial {0} is not in the lattice of this signature")]
    OutsideLattice(String),

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

impl Error {
    /// True for failures of the self-checks rather than of the caller's input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }
}
