use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("shape mismatch: {left_width}x{left_height} vs {right_width}x{right_height}")]
    ShapeMismatch {
        left_width: usize,
        left_height: usize,
        right_width: usize,
        right_height: usize,
    },

    #[error("distance transform needs at least one seed pixel")]
    EmptySeed,

    #[error("ground truth has no foreground pixels")]
    EmptyGroundTruth,

    #[error("result table is missing method {method:?} on image {image:?}")]
    MissingCell { method: String, image: String },

    #[error("scoring needs at least 2 methods, got {0}")]
    InsufficientMethods(usize),

    #[error("invalid degradation spec: {0}")]
    InvalidSpec(String),

    #[error("decode error: {0}")]
    Decode(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
