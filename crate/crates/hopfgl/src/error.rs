use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: String, found: String },
    #[error("generator `{0}` must have weight >= 1")]
    ZeroWeight(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}` in ring {1}")]
    UnknownGenerator(String, String),
    #[error("ring {0} has no tensor square")]
    NoTensorSquare(String),
    #[error("morphism needs {expected} generator images, got {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("image of `{gen}` is not homogeneous of weight {weight}")]
    NonGradedImage { gen: String, weight: u32 },
    #[error("series coefficient index 0 is reserved (constant term is always zero)")]
    ConstantTerm,
    #[error("series is not monic in x: linear coefficient is {0}")]
    NonMonicSeries(String),
    #[error("twist series must be x plus counit-trivial higher terms: {0}")]
    InvalidTwistSeries(String),
    #[error("invalid hopf descriptor: {0}")]
    InvalidHopf(String),
    #[error("operation requires a cocommutative hopf algebra")]
    NotCocommutative,
    #[error("hopf descriptor mismatch between operands")]
    HopfMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("truncation order must lie in 1..={max}, got {got}")]
    OrderOutOfRange { got: u32, max: u32 },
    #[error("io error reading {path}: {msg}")]
    Io { path: String, msg: String },
}

pub type AlgResult<T> = Result<T, AlgError>;
