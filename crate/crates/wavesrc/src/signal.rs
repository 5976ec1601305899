//! Causal source waveforms.
//!
//! Every signal vanishes for `t < 0`; propagation formulas rely on that to
//! produce zero fields ahead of the first arrival.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A causal scalar signal λ(t).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Signal {
    /// `sin(omega·t)·exp(-decay·(t - center)²)` for `t >= 0`, zero before.
    GaussianSine { omega: f64, center: f64, decay: f64 },
    /// Linear interpolation of `(times, values)`, zero outside the table.
    Tabulated { times: Vec<f64>, values: Vec<f64> },
}

impl Signal {
    /// Gaussian-modulated sine pulse.
    pub fn gaussian_sine(omega: f64, center: f64, decay: f64) -> Result<Self> {
        if !omega.is_finite() || !center.is_finite() || !decay.is_finite() || decay < 0.0 {
            return Err(Error::invalid("signal", "pulse parameters must be finite, decay >= 0"));
        }
        Ok(Signal::GaussianSine { omega, center, decay })
    }

    /// Tabulated signal with linear interpolation.
    ///
    /// Times must be strictly increasing and non-negative, values finite.
    /// A nonzero value at `t = 0` is rejected: it would break the causal
    /// extension λ(t) = 0 for t < 0 with a jump at the origin.
    pub fn tabulated(times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if times.len() != values.len() {
            return Err(Error::invalid("signal", "times and values lengths differ"));
        }
        if times.len() < 2 {
            return Err(Error::invalid("signal", "tabulated signal needs at least 2 samples"));
        }
        if times.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::invalid("signal", "times must be strictly increasing"));
        }
        if times[0] < 0.0 {
            return Err(Error::invalid("signal", "times must be non-negative"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("signal", "values must be finite"));
        }
        if times[0] == 0.0 && values[0] != 0.0 {
            return Err(Error::invalid("signal", "value at t = 0 must be 0 (causality)"));
        }
        Ok(Signal::Tabulated { times, values })
    }

    /// Evaluate λ(t). Total: returns 0 for `t < 0` and outside a table's range.
    pub fn eval(&self, t: f64) -> f64 {
        if t < 0.0 {
            return 0.0;
        }
        match self {
            Signal::GaussianSine { omega, center, decay } => {
                let d = t - center;
                (omega * t).sin() * (-decay * d * d).exp()
            }
            Signal::Tabulated { times, values } => {
                if t < times[0] || t > *times.last().unwrap() {
                    return 0.0;
                }
                // partition_point gives the first index with times[i] > t
                let hi = times.partition_point(|&ti| ti <= t);
                if hi == times.len() {
                    return *values.last().unwrap();
                }
                let lo = hi - 1;
                let f = (t - times[lo]) / (times[hi] - times[lo]);
                values[lo] + f * (values[hi] - values[lo])
            }
        }
    }
}
