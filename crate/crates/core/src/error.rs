use thiserror::Error;

use crate::point::show;

/// Axiom violations found while validating a small-element set.
///
/// Every variant carries a witness: the first offending point or pair in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("empty small-element set")]
    Empty,
    #[error("dimension mismatch: point {} has dimension {}, expected {expected}", show(.point), .point.len())]
    Dimension { point: Vec<u32>, expected: usize },
    #[error("zero missing: the origin is not a small element")]
    ZeroMissing,
    #[error("G1 violated: min({}, {}) = {} is missing", show(.a), show(.b), show(.min))]
    G1 { a: Vec<u32>, b: Vec<u32>, min: Vec<u32> },
    #[error("conductor missing: componentwise maximum {} is not a small element", show(.conductor))]
    ConductorMissing { conductor: Vec<u32> },
    #[error("locality violated by {}", show(.point))]
    Locality { point: Vec<u32> },
    #[error("additive closure violated: min({} + {}, c) = {} is missing", show(.a), show(.b), show(.sum))]
    Additive { a: Vec<u32>, b: Vec<u32>, sum: Vec<u32> },
    #[error("G3 violated: {} and {} agree on axis {} but no escape element exists", show(.a), show(.b), .axis + 1)]
    G3 { a: Vec<u32>, b: Vec<u32>, axis: usize },
    #[error("conductor cone: {} is not saturated", show(.point))]
    Saturation { point: Vec<u32> },
}

impl ValidationError {
    /// Short machine-readable code for the violated axiom.
    pub fn code(&self) -> &'static str {
        match self {
            ValidationError::Empty => "empty",
            ValidationError::Dimension { .. } => "dimension",
            ValidationError::ZeroMissing => "zero-missing",
            ValidationError::G1 { .. } => "g1",
            ValidationError::ConductorMissing { .. } => "conductor-missing",
            ValidationError::Locality { .. } => "locality",
            ValidationError::Additive { .. } => "additive-closure",
            ValidationError::G3 { .. } => "g3",
            ValidationError::Saturation { .. } => "saturation",
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation needs dimension 2, got {0}")]
    NotPlanar(usize),
    #[error("{0}")]
    Unsupported(String),
    #[error("not a track of this semigroup: {0}")]
    NotATrack(String),
    #[error("not an irreducible maximal: {0}")]
    NotIrreducibleMaximal(String),
    #[error("distance: {0}")]
    Distance(String),
    #[error("co-cone violated: {0}")]
    CoCone(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
