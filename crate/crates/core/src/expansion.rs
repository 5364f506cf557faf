//! Discrete inner products, Hahn projection and the coefficient-decay bound.
//!
//! Coefficients are always taken with respect to the normalized polynomials
//! `Q~_n`, so `u_hat_n = <Q~_n, u>_omega` and `P_m u = sum u_hat_n Q~_n`.
//! For every `k >= 0` and `n >= 1`,
//!
//! ```text
//! |u_hat_n| <= lambda_n^-k * ( sum_i omega(i) (L^k u)(i)^2 )^(1/2)
//! ```
//!
//! which follows from `u_hat_n (-lambda_n)^k = <Q~_n, L^k u>_omega` and
//! Cauchy-Schwarz.

use std::ops::RangeInclusive;

use crate::calculus::{GridFunction, LDisk};
use crate::dd::CompensatedSum;
use crate::error::{HahnError, Result};
use crate::hahn::{self, lambda, HahnBasis, WeightTable};
use crate::params::HahnParams;

/// Multiplicative slack allowed on the exact-eigenvalue decay bound.
pub const BOUND_SLACK: f64 = 1e-8;
/// Tolerance on `u_hat_n (-lambda_n)^k = <Q~_n, L^k u>`, relative to `||L^k u||_omega`.
pub const IDENTITY_TOL: f64 = 1e-6;

/// `sum_x f(x) g(x) omega(x)`.
pub fn inner_product(f: &GridFunction, g: &GridFunction, w: &WeightTable) -> Result<f64> {
    weighted_dot(f.values(), g.values(), w)
}

pub(crate) fn weighted_dot(f: &[f64], g: &[f64], w: &WeightTable) -> Result<f64> {
    let n = w.values().len();
    for len in [f.len(), g.len()] {
        if len != n {
            return Err(HahnError::LengthMismatch { expected: n, found: len });
        }
    }
    Ok(f.iter().zip(g).zip(w.values()).map(|((a, b), c)| a * b * c).collect::<CompensatedSum>().value())
}

/// Affine map from the grid interval `[0, N]` onto `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalMap {
    a: f64,
    b: f64,
    n_max: usize,
}

impl IntervalMap {
    pub fn new(a: f64, b: f64, n_max: usize) -> Result<Self> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(HahnError::DegenerateInterval { a, b });
        }
        Ok(Self { a, b, n_max })
    }

    /// `[0, N] -> [-1, 1]`.
    pub fn symmetric(n_max: usize) -> Self {
        Self { a: -1.0, b: 1.0, n_max }
    }

    pub fn bounds(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    /// `x in [0, N]` to `t in [a, b]`.
    pub fn to_target(&self, x: f64) -> f64 {
        self.a + (self.b - self.a) * x / self.n_max as f64
    }

    /// `t in [a, b]` to `x in [0, N]`.
    pub fn to_grid(&self, t: f64) -> f64 {
        (t - self.a) * self.n_max as f64 / (self.b - self.a)
    }

    pub fn node(&self, i: usize) -> f64 {
        self.to_target(i as f64)
    }

    /// Samples `f(t_i)` at every mapped grid node.
    pub fn sample(&self, params: HahnParams, f: impl Fn(f64) -> f64) -> GridFunction {
        GridFunction::from_fn(params, |i| f(self.node(i)))
    }
}

/// Expansion coefficients `u_hat_0..=u_hat_m` in the normalized basis.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    params: HahnParams,
    coeffs: Vec<f64>,
}

impl CoefficientVector {
    pub fn new(params: HahnParams, coeffs: Vec<f64>) -> Result<Self> {
        match coeffs.len() {
            0 => Err(HahnError::TooShort { len: 0 }),
            len if len > params.grid_len() => Err(HahnError::DegreeOutOfRange { degree: len - 1, max: params.n_max() }),
            _ => Ok(Self { params, coeffs }),
        }
    }

    pub fn params(&self) -> &HahnParams {
        &self.params
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Always true; kept so serialized data says which basis it refers to.
    pub fn is_normalized(&self) -> bool {
        true
    }

    /// The same expansion against the unnormalized `Q_n` (`Q_n(0) = 1`).
    pub fn unnormalized(&self) -> Result<Vec<f64>> {
        self.coeffs.iter().enumerate().map(|(n, c)| Ok(c / hahn::norm_sq(n, &self.params)?.sqrt())).collect()
    }

    /// `P_m u(x)` at any real `x`, through the recurrence.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let q = hahn::eval_all(self.degree(), x, &self.params)?;
        let mut acc = CompensatedSum::new();
        for (n, (c, qn)) in self.coeffs.iter().zip(q).enumerate() {
            acc.add(c * qn / hahn::norm_sq(n, &self.params)?.sqrt());
        }
        Ok(acc.value())
    }
}

pub fn eval_expansion(c: &CoefficientVector, x: f64) -> Result<f64> {
    c.eval(x)
}

impl HahnBasis {
    /// `u_hat_n = <Q~_n, u>_omega` for `n = 0..=m`.
    pub fn project(&self, u: &GridFunction, m: usize) -> Result<CoefficientVector> {
        self.params().check_degree(m)?;
        let coeffs = (0..=m)
            .map(|n| weighted_dot(self.normalized(n)?, u.values(), self.weights()))
            .collect::<Result<Vec<_>>>()?;
        CoefficientVector::new(*self.params(), coeffs)
    }
}

pub fn project(u: &GridFunction, m: usize) -> Result<CoefficientVector> {
    u.params().check_degree(m)?;
    HahnBasis::new(*u.params())?.project(u, m)
}

/// One line of the decay bound check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayReport {
    pub n: usize,
    pub k: u32,
    /// `lambda_n^-k ||L^k u||_omega`
    pub bound_exact: f64,
    /// `n^-2k ||L^k u||_omega`, reported only
    pub bound_power: f64,
    /// `|u_hat_n|`
    pub actual: f64,
    /// `|u_hat_n (-lambda_n)^k - <Q~_n, L^k u>| / ||L^k u||_omega`
    pub identity_error: f64,
}

impl DecayReport {
    pub fn bound_holds(&self) -> bool {
        self.actual <= self.bound_exact * (1.0 + BOUND_SLACK)
    }

    pub fn identity_holds(&self) -> bool {
        self.identity_error <= IDENTITY_TOL
    }
}

/// Decay bound of order `k` for every degree in `degrees`.
pub fn decay_report(
    basis: &HahnBasis,
    u: &GridFunction,
    k: u32,
    degrees: RangeInclusive<usize>,
) -> Result<Vec<DecayReport>> {
    let params = *basis.params();
    params.check_degree(*degrees.end())?;
    if k >= 1 && degrees.contains(&0) {
        return Err(HahnError::ZeroLambda { k });
    }
    let op = LDisk::new(basis.weights().clone());
    let lk = op.power(u, k)?;
    let lk_norm = inner_product(&lk, &lk, basis.weights())?.sqrt();
    degrees
        .map(|n| {
            let qn = basis.normalized(n)?;
            let coef = weighted_dot(qn, u.values(), basis.weights())?;
            let projected = weighted_dot(qn, lk.values(), basis.weights())?;
            let lam = lambda(n, &params);
            let lhs = coef * (-lam).powi(k as i32);
            let identity_error = if lk_norm > 0.0 { (lhs - projected).abs() / lk_norm } else { lhs.abs() };
            Ok(DecayReport {
                n,
                k,
                bound_exact: lk_norm / lam.powi(k as i32),
                bound_power: lk_norm / (n as f64).powi(2 * k as i32),
                actual: coef.abs(),
                identity_error,
            })
        })
        .collect()
}
