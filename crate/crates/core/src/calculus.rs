//! Difference operators on the grid `0..=N` and the self-adjoint operator
//! `L u = (1/omega) Delta[-D omega Nabla u]` whose eigenfunctions are the
//! Hahn polynomials, `L Q_n = -lambda_n Q_n`.

use crate::dd::CompensatedSum;
use crate::error::{HahnError, Result};
use crate::hahn::{coef_d, WeightTable};
use crate::params::HahnParams;

/// Real samples `u(0), ..., u(N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    params: HahnParams,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(params: HahnParams, values: Vec<f64>) -> Result<Self> {
        if values.len() != params.grid_len() {
            return Err(HahnError::LengthMismatch { expected: params.grid_len(), found: values.len() });
        }
        Ok(Self { params, values })
    }

    pub fn from_fn(params: HahnParams, f: impl FnMut(usize) -> f64) -> Self {
        Self { params, values: (0..params.grid_len()).map(f).collect() }
    }

    pub fn constant(params: HahnParams, c: f64) -> Self {
        Self::from_fn(params, |_| c)
    }

    pub fn params(&self) -> &HahnParams {
        &self.params
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    fn check_len(&self) -> Result<()> {
        if self.values.len() < 2 {
            return Err(HahnError::TooShort { len: self.values.len() });
        }
        Ok(())
    }

    /// `Delta f(x) = f(x+1) - f(x)`, valid for `x = 0..N-1`; slot `N` is NaN.
    pub fn forward_diff(&self) -> Result<GridFunction> {
        self.check_len()?;
        let mut values: Vec<f64> = self.values.windows(2).map(|w| w[1] - w[0]).collect();
        values.push(f64::NAN);
        Ok(Self { params: self.params, values })
    }

    /// `Nabla f(x) = f(x) - f(x-1)`, valid for `x = 1..N`; slot `0` is NaN.
    pub fn backward_diff(&self) -> Result<GridFunction> {
        self.check_len()?;
        let mut values = Vec::with_capacity(self.values.len());
        values.push(f64::NAN);
        values.extend(self.values.windows(2).map(|w| w[1] - w[0]));
        Ok(Self { params: self.params, values })
    }
}

impl std::ops::Index<usize> for GridFunction {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.values[i]
    }
}

/// The operator `L = (1/omega) Delta[-D omega Nabla]` for one parameter set.
///
/// Boundary terms vanish through the coefficients themselves: `D(0) = 0`
/// removes `u(-1)` at `i = 0` and `omega(N+1) = 0` removes `u(N+1)` at
/// `i = N`, so no value outside the grid is ever read.
#[derive(Debug, Clone)]
pub struct LDisk {
    weights: WeightTable,
    // flux[i] = -D(i) omega(i) for i = 0..=N+1
    flux: Vec<f64>,
}

impl LDisk {
    pub fn new(weights: WeightTable) -> Self {
        let params = *weights.params();
        let flux = (0..=params.n_max() + 1)
            .map(|i| {
                let w = weights.at(i);
                if w == 0.0 {
                    0.0
                } else {
                    -coef_d(i as f64, &params) * w
                }
            })
            .collect();
        Self { weights, flux }
    }

    pub fn for_params(params: HahnParams) -> Result<Self> {
        Ok(Self::new(WeightTable::new(params)?))
    }

    pub fn weights(&self) -> &WeightTable {
        &self.weights
    }

    pub fn apply(&self, u: &GridFunction) -> Result<GridFunction> {
        let params = *self.weights.params();
        let n = params.n_max();
        if u.len() != n + 1 {
            return Err(HahnError::LengthMismatch { expected: n + 1, found: u.len() });
        }
        let v = u.values();
        let values = (0..=n)
            .map(|i| {
                let right = if i < n { self.flux[i + 1] * (v[i + 1] - v[i]) } else { 0.0 };
                let left = if i > 0 { self.flux[i] * (v[i] - v[i - 1]) } else { 0.0 };
                (right - left) / self.weights.at(i)
            })
            .collect();
        Ok(GridFunction { params, values })
    }

    /// `L^k u`; `k = 0` returns `u` unchanged.
    pub fn power(&self, u: &GridFunction, k: u32) -> Result<GridFunction> {
        let mut out = u.clone();
        for _ in 0..k {
            out = self.apply(&out)?;
        }
        Ok(out)
    }
}

pub fn l_disk_apply(u: &GridFunction, params: &HahnParams) -> Result<GridFunction> {
    LDisk::for_params(*params)?.apply(u)
}

pub fn l_disk_power(u: &GridFunction, k: u32, params: &HahnParams) -> Result<GridFunction> {
    LDisk::for_params(*params)?.power(u, k)
}

/// `|LHS - RHS|` of
/// `sum_{i=0}^{N} f(i) Delta g(i) = f g |_0^{N+1} - sum_{i=0}^{N} g(i+1) Delta f(i)`,
/// with the values at `N + 1` supplied by the caller.
pub fn sbp_residual(f: &GridFunction, g: &GridFunction, f_end: f64, g_end: f64) -> Result<f64> {
    f.check_len()?;
    g.check_len()?;
    if f.len() != g.len() {
        return Err(HahnError::LengthMismatch { expected: f.len(), found: g.len() });
    }
    let n = f.len() - 1;
    let fx = |i: usize| if i <= n { f[i] } else { f_end };
    let gx = |i: usize| if i <= n { g[i] } else { g_end };
    let lhs: CompensatedSum = (0..=n).map(|i| fx(i) * (gx(i + 1) - gx(i))).collect();
    let mut rhs: CompensatedSum = (0..=n).map(|i| -gx(i + 1) * (fx(i + 1) - fx(i))).collect();
    rhs.add(f_end * g_end);
    rhs.add(-f[0] * g[0]);
    Ok((lhs.value() - rhs.value()).abs())
}
