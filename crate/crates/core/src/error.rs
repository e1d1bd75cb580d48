use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ambient dimension {got} exceeds the supported bound {max}")]
    DimensionBound { max: usize, got: usize },
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("polytope has non-integer vertices")]
    NonIntegerVertices,
    #[error("zero-length segment")]
    DegenerateSegment,
    #[error("point lies on the curve")]
    PointOnCurve,
    #[error("expected {expected} bodies, got {got}")]
    WrongBodyCount { expected: usize, got: usize },
    #[error("polytopes are not analogous to the reference polytope")]
    NotAnalogous,
    #[error("nerve inclusion fails: no compatible map exists")]
    NotSubcomplex,
    #[error("index sets differ")]
    IndexSetMismatch,
    #[error("translations are not compatible with the nerve")]
    IncompatibleTranslation,
    #[error("no polynomial of the requested degree interpolates the samples")]
    InconsistentSamples,
    #[error("simplicial chain has nonzero boundary")]
    NotACycle,
    #[error("family member is not a hyperplane")]
    NonHyperplane,
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
