use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("generator {index} is not an involution; the graph cannot be edge-colored")]
    NonInvolutiveGenerator { index: usize },
    #[error("the identity element cannot be a generator")]
    IdentityGenerator,
    #[error("graph carries no group metadata (not built by build_cayley)")]
    MissingGroupMetadata,
    #[error("matrix is not Hermitian (defect {defect:e})")]
    NotHermitian { defect: f64 },
    #[error("matrix is not unitary (defect {defect:e})")]
    NotUnitary { defect: f64 },
    #[error("state is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },
    #[error("invalid density operator: {0}")]
    InvalidDensity(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("operator kind mismatch: {0}")]
    WrongKind(String),
    #[error("resource guard exceeded: {0}")]
    ResourceGuard(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
