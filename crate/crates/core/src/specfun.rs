//! Pochhammer symbols, terminating hypergeometric sums and the Hahn weight.

use crate::dd::DoubleDouble;
use crate::error::{HahnError, Result};
use crate::params::HahnParams;

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (a + j as f64))
}

/// A `3F2(a1, a2, a3; b1, b2; z)` whose first numerator parameter is a
/// nonpositive integer, so the series is a finite sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Terminating3F2 {
    pub numerator: [f64; 3],
    pub denominator: [f64; 2],
    pub argument: f64,
}

/// Longest series accepted by [`Terminating3F2::sum`].
pub const MAX_TERMS: usize = 200;

impl Terminating3F2 {
    pub fn new(numerator: [f64; 3], denominator: [f64; 2], argument: f64) -> Self {
        Self { numerator, denominator, argument }
    }

    /// Number of nonzero-index terms, `n = -a1`.
    pub fn length(&self) -> Result<usize> {
        let a1 = self.numerator[0];
        if !(a1 <= 0.0 && a1.fract() == 0.0 && -a1 <= MAX_TERMS as f64) {
            return Err(HahnError::NonTerminating(a1));
        }
        Ok((-a1) as usize)
    }

    /// Evaluates the finite sum.
    ///
    /// Terms are generated by their ratio and both the term and the running
    /// sum are carried in double-double arithmetic. Hahn series at large
    /// degree and abscissa have alternating terms near `1e21` that cancel to
    /// `O(1)`, which plain compensated summation of rounded terms cannot
    /// resolve.
    pub fn sum(&self) -> Result<f64> {
        let n = self.length()?;
        for &b in &self.denominator {
            if let Some(k) = (0..n).find(|&k| b + k as f64 == 0.0) {
                return Err(HahnError::ZeroDenominator { index: k + 1 });
            }
        }
        let [a1, a2, a3] = self.numerator;
        let [b1, b2] = self.denominator;
        let z = DoubleDouble::from_f64(self.argument);
        let mut term = DoubleDouble::ONE;
        let mut total = DoubleDouble::ONE;
        for k in 0..n {
            let kf = k as f64;
            let num = DoubleDouble::sum_of(a1, kf) * DoubleDouble::sum_of(a2, kf) * DoubleDouble::sum_of(a3, kf);
            let den = DoubleDouble::sum_of(b1, kf) * DoubleDouble::sum_of(b2, kf) * DoubleDouble::from_f64(kf + 1.0);
            term = term * num / den * z;
            if term.is_zero() {
                break;
            }
            total = total + term;
        }
        Ok(total.to_f64())
    }
}

/// Binomial coefficient in exact integer arithmetic, `None` on overflow.
pub fn binomial_exact(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 1..=k as u128 {
        // acc * (n - k + j) is divisible by j at every step
        acc = acc.checked_mul(n as u128 - k as u128 + j)? / j;
    }
    Some(acc)
}

fn as_nonneg_integer(v: f64) -> Option<u64> {
    (v >= 0.0 && v.fract() == 0.0 && v < 1e15).then_some(v as u64)
}

/// `omega(x) = C(alpha + x, x) * C(beta + N - x, N - x)` from log-gamma values.
pub fn weight_log_gamma(x: usize, params: &HahnParams) -> Result<f64> {
    check_grid_index(x, params)?;
    let (a, b) = (params.alpha(), params.beta());
    let xf = x as f64;
    let rest = (params.n_max() - x) as f64;
    let ln = libm::lgamma(a + 1.0 + xf) - libm::lgamma(xf + 1.0) - libm::lgamma(a + 1.0) + libm::lgamma(b + 1.0 + rest)
        - libm::lgamma(rest + 1.0)
        - libm::lgamma(b + 1.0);
    Ok(ln.exp())
}

fn check_grid_index(x: usize, params: &HahnParams) -> Result<()> {
    if x > params.n_max() {
        return Err(HahnError::Domain(format!("grid index {x} outside 0..={}", params.n_max())));
    }
    Ok(())
}

/// Hahn weight at grid index `x`.
///
/// Integer `alpha` and `beta` go through exact binomials; everything else,
/// and integer cases whose binomials overflow `u128`, through log-gamma.
pub fn log_gamma_ratio_weight(x: usize, params: &HahnParams) -> Result<f64> {
    check_grid_index(x, params)?;
    if let (Some(a), Some(b)) = (as_nonneg_integer(params.alpha()), as_nonneg_integer(params.beta())) {
        let x = x as u64;
        let rest = params.n_max() as u64 - x;
        if let (Some(left), Some(right)) = (binomial_exact(a + x, x), binomial_exact(b + rest, rest)) {
            return Ok(left as f64 * right as f64);
        }
    }
    weight_log_gamma(x, params)
}
