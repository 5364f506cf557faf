use std::fmt;

use crate::error::{HahnError, Result};

/// The triple `(alpha, beta, N)` selecting a Hahn family on the grid `0..=N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HahnParams {
    alpha: f64,
    beta: f64,
    n_max: usize,
}

impl HahnParams {
    pub fn new(alpha: f64, beta: f64, n_max: usize) -> Result<Self> {
        if !alpha.is_finite() || alpha <= -1.0 {
            return Err(HahnError::Domain(format!("alpha must be finite and > -1, got {alpha}")));
        }
        if !beta.is_finite() || beta <= -1.0 {
            return Err(HahnError::Domain(format!("beta must be finite and > -1, got {beta}")));
        }
        if n_max < 1 {
            return Err(HahnError::Domain("N must be at least 1".into()));
        }
        Ok(Self { alpha, beta, n_max })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Largest grid index `N`; the grid has `N + 1` points.
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn grid_len(&self) -> usize {
        self.n_max + 1
    }

    pub(crate) fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.n_max {
            Err(HahnError::DegreeOutOfRange { degree, max: self.n_max })
        } else {
            Ok(())
        }
    }

    /// Short label usable as a CSV column suffix, e.g. `a0.5_b0.5`.
    pub fn label(&self) -> String {
        format!("a{}_b{}", self.alpha, self.beta)
    }
}

impl fmt::Display for HahnParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={} beta={} N={}", self.alpha, self.beta, self.n_max)
    }
}
