use thiserror::Error;

/// Errors raised by the walk, density-matrix and channel routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },

    #[error("matrix is not Hermitian (max asymmetry {max_asymmetry:e})")]
    NotHermitian { max_asymmetry: f64 },

    #[error("coin amplitudes are not normalized (|c0|^2 + |c1|^2 = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("nonzero amplitude at boundary site {site} would leave the lattice on shift")]
    BoundaryAmplitude { site: i64 },

    #[error("site {site} outside lattice [-{half_width}, {half_width}]")]
    SiteOutOfRange { site: i64, half_width: usize },

    #[error("site pair must be distinct (got {0} twice)")]
    CoincidentSites(i64),

    #[error("site {0} has zero occupation, overlap undefined")]
    NoOverlap(i64),

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
