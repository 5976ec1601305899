//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A domain object failed its construction invariants.
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },

    /// Kernel evaluation requested at a point coinciding with its anchor.
    #[error("evaluation point coincides with source point {point:?}")]
    CoincidentPoint { point: [f64; 3] },

    /// A sensor lies strictly inside the sampling grid's bounding box.
    #[error("sensor {index} at {point:?} lies inside the sampling region")]
    SensorInsideGrid { index: usize, point: [f64; 3] },

    /// A sensor coincides with a sampling grid point (singular kernel column).
    #[error("sensor {index} coincides with sampling grid point {cell}")]
    SensorOnGridPoint { index: usize, cell: usize },

    /// Sampled trajectory speed reaches or exceeds the wave speed.
    #[error("trajectory speed {max_speed} reaches wave speed {wave_speed}")]
    Superluminal { max_speed: f64, wave_speed: f64 },

    /// The retarded-time solve failed to converge even after bisection.
    #[error("retarded-time solve did not converge (residual {residual})")]
    RetardedSolveFailed { residual: f64 },

    /// Measurement samples contain non-finite entries.
    #[error("measurement data contains non-finite samples")]
    NonFiniteData,

    /// Vector or matrix length does not match the declared geometry.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Too few valid steps remain for trajectory repair.
    #[error("trajectory repair needs at least 2 valid steps, found {valid}")]
    TooFewValidSteps { valid: usize },

    /// Fourier order too high for the number of samples.
    #[error("fourier order {order} aliases on {samples} samples (need >= 2*order+1)")]
    AliasedFourierOrder { order: usize, samples: usize },
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
