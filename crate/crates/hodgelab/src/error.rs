//! Shared error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree {degree} out of range for dimension {dim}")]
    DegreeOutOfRange { degree: isize, dim: usize },

    #[error("mesh generation failed: {0}")]
    MeshGeneration(String),

    #[error("degenerate element: {0}")]
    DegenerateElement(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix not positive definite (pivot {pivot:.3e} at row {row})")]
    NotPositiveDefinite { row: usize, pivot: f64 },

    #[error("eigensolver failed to converge at index {index} after {iterations} iterations")]
    NoConvergence { index: usize, iterations: usize },

    #[error("negative eigenvalue {value:.3e} below PSD guard {guard:.3e}")]
    NegativeEigenvalue { value: f64, guard: f64 },

    #[error("integer overflow during exact elimination")]
    IntegerOverflow,

    #[error("trial subspace is numerically dependent (Gram pivot {pivot:.3e})")]
    DependentSubspace { pivot: f64 },

    #[error("root isolation failed for {0}")]
    RootIsolation(String),

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("lambda {lambda} beyond reliable range {reliable}")]
    RangeExceeded { lambda: f64, reliable: f64 },

    #[error("index range {requested} beyond available coverage {available}")]
    IndexRange { requested: usize, available: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
