use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("grid needs at least 2 nodes, got {0}")]
    GridTooSmall(usize),

    #[error("grid spacing must be positive")]
    NonPositiveSpacing,

    #[error("operands live on different grids")]
    GridMismatch,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    #[error("dynamics diverged (non-finite state) at step {step}")]
    Diverged { step: usize },

    #[error("moment profile needs max_order >= 2, got {0}")]
    MomentOrderTooLow(usize),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("{what} must be {constraint}")]
    InvalidParameter {
        what: &'static str,
        constraint: &'static str,
    },

    #[error("quadrature rule supports 1..=3 nodes per cell, got {0}")]
    QuadratureOrder(usize),

    #[error("quadrature weights sum to {got}, expected cell measure {expected}")]
    QuadratureWeights { expected: f64, got: f64 },

    #[error("sample tensor shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },

    #[error("cluster {0} is empty")]
    EmptyCluster(usize),

    #[error("point {index} has dimension {got}, expected {expected}")]
    PointDimension {
        index: usize,
        expected: usize,
        got: usize,
    },

    #[error("step index {t} out of range 0..={steps}")]
    StepOutOfRange { t: usize, steps: usize },

    #[error("parameter mode mismatch: expected {expected}, got {got}")]
    ModeMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("non-finite gradient at iteration {iteration}")]
    NonFiniteGradient { iteration: usize },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
