//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible graded rings")]
    IncompatibleGradedRings,

    #[error("graded class has no multiplicative inverse: degree-0 part is not 1")]
    NotInvertible,

    #[error("symmetric power requires a rank-2 input, got rank {0}")]
    ExpectedRank2(usize),

    #[error("expression is not symmetric in the root alphabet")]
    NotSymmetric,

    #[error("unsupported Grassmannian Gr({k},{n}): need 0 < k <= 3 and k < n <= 8")]
    UnsupportedGrassmannian { k: usize, n: usize },

    #[error("partition does not fit the {k}x{cols} box")]
    PartitionOutOfBox { k: usize, cols: usize },

    #[error("ambient Grassmannians differ: Gr({0},{1}) vs Gr({2},{3})")]
    AmbientMismatch(usize, usize, usize, usize),

    #[error("expected codimension-4 class")]
    ExpectedCodimension4,

    #[error("class is not homogeneous")]
    Inhomogeneous,

    #[error("gram matrix is not symmetric")]
    GramNotSymmetric,

    #[error("gram matrix is not square or does not match its labels")]
    GramShape,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("no pairing constant configured for this lattice model")]
    PairingConstantUnset,

    #[error("exceptional-class degree exceeds 4")]
    ExceptionalDegreeTooLarge,

    #[error("relative hyperplane degree exceeds 3")]
    HyperplaneDegreeTooLarge,

    #[error("zero vector cannot be a ray")]
    ZeroRay,

    #[error("cone is not salient")]
    NotSalient,

    #[error("singular pairing")]
    SingularPairing,

    #[error("dual cone needs a full-dimensional cone (two independent rays)")]
    ConeNotFullDimensional,

    #[error("empty lambda interval: {0} > {1}")]
    EmptyInterval(String, String),

    #[error("unknown variety {got:?}; known varieties: {known}")]
    UnknownVariety { got: String, known: String },

    #[error("unknown catalog object {got:?} in variety {variety:?}")]
    UnknownObject { variety: String, got: String },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("degree overflow at position {pos}: {msg}")]
    DegreeOverflow { pos: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// True for errors that indicate a bug in this crate rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
