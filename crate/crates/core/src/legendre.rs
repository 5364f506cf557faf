//! Continuous reference: Legendre polynomials, Gauss-Legendre rules and
//! truncated Legendre series coefficients.

use std::f64::consts::PI;

use crate::dd::CompensatedSum;
use crate::error::{HahnError, Result};

/// `P_n(t)` by the Bonnet recurrence.
pub fn legendre_eval(n: usize, t: f64) -> f64 {
    legendre_pair(n, t).0
}

// (P_n(t), P_{n-1}(t)), with P_{-1} = 0
fn legendre_pair(n: usize, t: f64) -> (f64, f64) {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 1..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * t * cur - (kf - 1.0) * prev) / kf;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

const MAX_POINTS: usize = 200;
const NEWTON_CAP: usize = 100;

impl QuadratureRule {
    /// Gauss-Legendre rule on `[-1, 1]` with `points` nodes, found by Newton
    /// iteration on `P_n` from Chebyshev-like initial guesses.
    pub fn gauss_legendre(points: usize) -> Result<Self> {
        if points == 0 || points > MAX_POINTS {
            return Err(HahnError::Domain(format!("quadrature order {points} outside 1..={MAX_POINTS}")));
        }
        let n = points;
        let nf = n as f64;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n / 2 {
            let mut t = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut converged = false;
            for _ in 0..NEWTON_CAP {
                let (p, pm1) = legendre_pair(n, t);
                let deriv = nf * (t * p - pm1) / (t * t - 1.0);
                let step = p / deriv;
                t -= step;
                if step.abs() <= 4.0 * f64::EPSILON {
                    converged = true;
                    break;
                }
            }
            if !converged {
                return Err(HahnError::ConvergenceFailure { points });
            }
            let w = Self::weight_at(n, t);
            // ascending order: the positive root goes to the upper half
            nodes[i] = -t;
            nodes[n - 1 - i] = t;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
            weights[n / 2] = Self::weight_at(n, 0.0);
        }
        Ok(Self { nodes, weights })
    }

    // 2 / ((1 - t^2) P_n'(t)^2)
    fn weight_at(n: usize, t: f64) -> f64 {
        let (p, pm1) = legendre_pair(n, t);
        let deriv = n as f64 * (t * p - pm1) / (t * t - 1.0);
        2.0 / ((1.0 - t * t) * deriv * deriv)
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&t, &w)| w * f(t)).collect::<CompensatedSum>().value()
    }
}

/// `f_hat_n = (2n+1)/2 * int_{-1}^{1} f P_n`, `n = 0..=m`, using an
/// `(m + 20)`-point Gauss rule.
pub fn legendre_coeffs(f: impl Fn(f64) -> f64, m: usize) -> Result<Vec<f64>> {
    let rule = QuadratureRule::gauss_legendre(m + 20)?;
    let values: Vec<f64> = rule.nodes().iter().map(|&t| f(t)).collect();
    Ok((0..=m)
        .map(|n| {
            let integral: CompensatedSum = rule
                .nodes()
                .iter()
                .zip(rule.weights())
                .zip(&values)
                .map(|((&t, &w), &v)| w * v * legendre_eval(n, t))
                .collect();
            (2 * n + 1) as f64 / 2.0 * integral.value()
        })
        .collect())
}
