use thiserror::Error;

#[derive(Debug, Error)]
pub enum SymobError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {degree} exceeds the configured bound {bound} (raise with --max-degree)")]
    DegreeBound { degree: usize, bound: usize },
    #[error("element is not supported on a single conjugacy class")]
    MixedClassSupport,
    #[error("index {0} out of range {1}..={2}")]
    IndexOutOfRange(usize, usize, usize),
    #[error("invalid one-line notation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cache error: {0}")]
    Cache(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, SymobError>;
