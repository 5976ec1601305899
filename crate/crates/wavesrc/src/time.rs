//! Uniform time discretization of the recording window.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform grid `t_k = k·T/N`, `k = 1..=N`.
///
/// The `k = 0` sample is omitted: causality forces it to zero, so it carries
/// no information. [`TimeGrid::time`] accepts `k = 0` and returns `0.0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimeGrid {
    terminal: f64,
    steps: usize,
}

impl TimeGrid {
    pub fn new(terminal: f64, steps: usize) -> Result<Self> {
        if !(terminal > 0.0) || !terminal.is_finite() {
            return Err(Error::invalid("time grid", "terminal time must be positive and finite"));
        }
        if steps < 2 {
            return Err(Error::invalid("time grid", "need at least 2 steps"));
        }
        Ok(TimeGrid { terminal, steps })
    }

    pub fn terminal(&self) -> f64 {
        self.terminal
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn dt(&self) -> f64 {
        self.terminal / self.steps as f64
    }

    /// Time of step `k` (1-based; `k = 0` maps to `t = 0`).
    pub fn time(&self, k: usize) -> f64 {
        k as f64 * self.terminal / self.steps as f64
    }

    /// All sampled times `t_1..t_N`.
    pub fn times(&self) -> Vec<f64> {
        (1..=self.steps).map(|k| self.time(k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_uniform_and_increasing() {
        let g = TimeGrid::new(15.0, 64).unwrap();
        let ts = g.times();
        assert_eq!(ts.len(), 64);
        assert_eq!(ts[0], 15.0 / 64.0);
        assert_eq!(*ts.last().unwrap(), 15.0);
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g.time(0), 0.0);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(TimeGrid::new(0.0, 4).is_err());
        assert!(TimeGrid::new(-1.0, 4).is_err());
        assert!(TimeGrid::new(1.0, 1).is_err());
    }
}
