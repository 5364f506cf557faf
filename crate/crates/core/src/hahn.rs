//! Hahn polynomials `Q_n(x; alpha, beta, N)` normalized by `Q_n(0) = 1`.

use crate::dd::{CompensatedSum, DoubleDouble};
use crate::error::{HahnError, Result};
use crate::params::HahnParams;
use crate::specfun::{self, Terminating3F2};

/// `omega(0..=N)`, the weights of the discrete inner product.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightTable {
    params: HahnParams,
    values: Vec<f64>,
    total: f64,
}

impl WeightTable {
    pub fn new(params: HahnParams) -> Result<Self> {
        let values =
            (0..=params.n_max()).map(|x| specfun::log_gamma_ratio_weight(x, &params)).collect::<Result<Vec<_>>>()?;
        let total = values.iter().copied().collect::<CompensatedSum>().value();
        Ok(Self { params, values, total })
    }

    pub fn params(&self) -> &HahnParams {
        &self.params
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn total(&self) -> f64 {
        self.total
    }

    /// `omega(i)`, reading zero for any index past `N`.
    pub fn at(&self, i: usize) -> f64 {
        self.values.get(i).copied().unwrap_or(0.0)
    }
}

/// `Q_n(x)` from its terminating `3F2` representation.
pub fn eval_series(degree: usize, x: f64, params: &HahnParams) -> Result<f64> {
    params.check_degree(degree)?;
    let (a, b) = (params.alpha(), params.beta());
    let n = degree as f64;
    Terminating3F2::new([-n, n + a + b + 1.0, -x], [a + 1.0, -(params.n_max() as f64)], 1.0).sum()
}

/// `Q_0(x), ..., Q_m(x)` by upward three-term recurrence.
///
/// The recurrence loses roughly `log10(prod C_k / A_k)` digits as `n`
/// approaches `N` because `A_n` carries the factor `N - n`; about 15 digits
/// at `N = 30`. It therefore runs in double-double, which keeps grid values
/// at full double accuracy up to `N = 30` and to about `1e-11` at `N = 40`.
pub fn eval_all(max_degree: usize, x: f64, params: &HahnParams) -> Result<Vec<f64>> {
    params.check_degree(max_degree)?;
    let mut out = Vec::with_capacity(max_degree + 1);
    out.push(1.0);
    if max_degree == 0 {
        return Ok(out);
    }
    let dd = DoubleDouble::from_f64;
    let (a, b) = (dd(params.alpha()), dd(params.beta()));
    let big = dd(params.n_max() as f64);
    let x = dd(x);
    let one = DoubleDouble::ONE;
    let two = dd(2.0);
    let ab = a + b;
    let mut prev = one;
    let mut cur = one - (ab + two) * x / ((a + one) * big);
    out.push(cur.to_f64());
    for n in 1..max_degree {
        let nf = dd(n as f64);
        let s = two * nf + ab;
        let an = (nf + ab + one) * (nf + a + one) * (big - nf) / ((s + one) * (s + two));
        let cn = nf * (nf + ab + big + one) * (nf + b) / (s * (s + one));
        if an.is_zero() {
            return Err(HahnError::DegenerateRecurrence { degree: n });
        }
        let next = ((an + cn - x) * cur - cn * prev) / an;
        prev = cur;
        cur = next;
        out.push(cur.to_f64());
    }
    Ok(out)
}

/// `Q_n(x)` by the three-term recurrence; the default evaluation path.
pub fn eval_recurrence(degree: usize, x: f64, params: &HahnParams) -> Result<f64> {
    Ok(eval_all(degree, x, params)?[degree])
}

/// Closed-form squared norm `<Q_n, Q_n>_omega`.
///
/// The sign-carrying pair `(-1)^n / (-N)_n` is folded into `(N-n)!/N!`
/// before any floating-point work, and the remaining factors are
/// accumulated as ratios of comparable size.
pub fn norm_sq(degree: usize, params: &HahnParams) -> Result<f64> {
    params.check_degree(degree)?;
    let dd = DoubleDouble::from_f64;
    let one = DoubleDouble::ONE;
    let (a, b) = (dd(params.alpha()), dd(params.beta()));
    let big = params.n_max();
    let n = dd(degree as f64);
    let ab1 = n + a + b + one;
    // (n+a+b+1) / (2n+a+b+1), exactly 1 at n = 0 (covers a + b = -1)
    let mut acc = if degree == 0 { one } else { ab1 / (n + n + a + b + one) };
    // (n+a+b+2)_N / N!
    for j in 1..=big {
        let j = dd(j as f64);
        acc = acc * (ab1 + j) / j;
    }
    // (b+1)_n / (a+1)_n
    for j in 0..degree {
        let j = dd(j as f64);
        acc = acc * (b + one + j) / (a + one + j);
    }
    // n! (N-n)! / N!
    for j in 1..=degree {
        acc = acc * dd(j as f64) / dd((big - degree + j) as f64);
    }
    Ok(acc.to_f64())
}

/// `Q~_n(x) = Q_n(x) / ||Q_n||_omega`.
pub fn eval_normalized(degree: usize, x: f64, params: &HahnParams) -> Result<f64> {
    Ok(eval_recurrence(degree, x, params)? / norm_sq(degree, params)?.sqrt())
}

/// Eigenvalue and coefficient functions of the Hahn difference equation
/// `lambda_n Q_n(x) = B(x) Q_n(x+1) - [B(x) + D(x)] Q_n(x) + D(x) Q_n(x-1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenData {
    pub degree: usize,
    pub lambda: f64,
    params: HahnParams,
}

impl EigenData {
    pub fn new(degree: usize, params: &HahnParams) -> Result<Self> {
        params.check_degree(degree)?;
        Ok(Self { degree, lambda: lambda(degree, params), params: *params })
    }

    pub fn b(&self, x: f64) -> f64 {
        coef_b(x, &self.params)
    }

    pub fn d(&self, x: f64) -> f64 {
        coef_d(x, &self.params)
    }
}

/// `lambda_n = n (n + alpha + beta + 1)`.
pub fn lambda(degree: usize, params: &HahnParams) -> f64 {
    let n = degree as f64;
    n * (n + params.alpha() + params.beta() + 1.0)
}

/// `B(x) = (x + alpha + 1)(x - N)`.
pub fn coef_b(x: f64, params: &HahnParams) -> f64 {
    (x + params.alpha() + 1.0) * (x - params.n_max() as f64)
}

/// `D(x) = x (x - beta - N - 1)`.
pub fn coef_d(x: f64, params: &HahnParams) -> f64 {
    x * (x - params.beta() - params.n_max() as f64 - 1.0)
}

/// Weights, norms and the normalized polynomials tabulated on the grid.
#[derive(Debug, Clone)]
pub struct HahnBasis {
    weights: WeightTable,
    norms: Vec<f64>,
    // table[n][i] = Q~_n(i)
    table: Vec<Vec<f64>>,
}

impl HahnBasis {
    pub fn new(params: HahnParams) -> Result<Self> {
        let weights = WeightTable::new(params)?;
        let big = params.n_max();
        let norms = (0..=big).map(|n| norm_sq(n, &params).map(f64::sqrt)).collect::<Result<Vec<_>>>()?;
        let mut table = vec![vec![0.0; big + 1]; big + 1];
        for i in 0..=big {
            for (n, q) in eval_all(big, i as f64, &params)?.into_iter().enumerate() {
                table[n][i] = q / norms[n];
            }
        }
        Ok(Self { weights, norms, table })
    }

    pub fn params(&self) -> &HahnParams {
        self.weights.params()
    }

    pub fn weights(&self) -> &WeightTable {
        &self.weights
    }

    /// `||Q_n||_omega` for `n = 0..=N`.
    pub fn norms(&self) -> &[f64] {
        &self.norms
    }

    /// `Q~_n` sampled at `0..=N`.
    pub fn normalized(&self, degree: usize) -> Result<&[f64]> {
        self.params().check_degree(degree)?;
        Ok(&self.table[degree])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: f64, b: f64, n: usize) -> HahnParams {
        HahnParams::new(a, b, n).unwrap()
    }

    fn reference_sets(n: usize) -> [HahnParams; 3] {
        [p(0.0, 0.0, n), p(0.5, 0.5, n), p(5.0, 0.0, n)]
    }

    #[test]
    fn degree_zero_is_one() {
        let q = p(0.3, 1.7, 12);
        assert_eq!(eval_series(0, 7.3, &q).unwrap(), 1.0);
        assert_eq!(eval_recurrence(0, 7.3, &q).unwrap(), 1.0);
    }

    #[test]
    fn degree_one_unit_weights() {
        let q = p(0.0, 0.0, 30);
        for x in [0.0, 3.0, 15.0, 22.5, 30.0] {
            let expected = 1.0 - x / 15.0;
            assert!((eval_series(1, x, &q).unwrap() - expected).abs() < 1e-15);
            assert!((eval_recurrence(1, x, &q).unwrap() - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_degree_beyond_grid() {
        let q = p(0.0, 0.0, 4);
        let err = HahnError::DegreeOutOfRange { degree: 5, max: 4 };
        assert_eq!(eval_series(5, 1.0, &q), Err(err.clone()));
        assert_eq!(eval_recurrence(5, 1.0, &q), Err(err.clone()));
        assert_eq!(norm_sq(5, &q), Err(err.clone()));
        assert_eq!(EigenData::new(5, &q), Err(err));
    }

    #[test]
    fn paths_agree_on_grid() {
        for n_max in [1usize, 2, 7, 16, 30] {
            for q in reference_sets(n_max) {
                for n in 0..=n_max {
                    for x in 0..=n_max {
                        let s = eval_series(n, x as f64, &q).unwrap();
                        let r = eval_recurrence(n, x as f64, &q).unwrap();
                        assert!(
                            (s - r).abs() <= 1e-9 * s.abs().max(1.0),
                            "{q} n={n} x={x}: series {s:e} recurrence {r:e}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn weight_table_examples() {
        let t = WeightTable::new(p(0.0, 0.0, 30)).unwrap();
        assert!(t.values().iter().all(|&w| w == 1.0));
        assert_eq!(t.values().len(), 31);
        assert_eq!(t.total(), 31.0);
        assert_eq!(t.at(31), 0.0);
        let t = WeightTable::new(p(0.5, 0.5, 2)).unwrap();
        assert!((t.at(0) - t.at(2)).abs() <= 1e-15 * t.at(0));
        let t = WeightTable::new(p(5.0, 0.0, 30)).unwrap();
        assert_eq!(t.at(1), 6.0);
    }

    fn brute_norm_sq(n: usize, q: &HahnParams) -> f64 {
        let w = WeightTable::new(*q).unwrap();
        (0..=q.n_max())
            .map(|x| {
                let v = eval_recurrence(n, x as f64, q).unwrap();
                v * v * w.at(x)
            })
            .collect::<CompensatedSum>()
            .value()
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm_sq(0, &p(0.0, 0.0, 30)).unwrap(), 31.0);
        let q = p(5.0, 0.0, 8);
        let total = WeightTable::new(q).unwrap().total();
        assert!((norm_sq(0, &q).unwrap() - total).abs() <= 1e-13 * total);
        let q = p(0.5, 0.5, 10);
        let brute = brute_norm_sq(3, &q);
        assert!((norm_sq(3, &q).unwrap() - brute).abs() <= 1e-10 * brute);
    }

    #[test]
    fn norm_at_degenerate_sum() {
        // alpha + beta = -1 makes the printed closed form 0/0 at n = 0
        let q = p(-0.5, -0.5, 6);
        let total = WeightTable::new(q).unwrap().total();
        assert!((norm_sq(0, &q).unwrap() - total).abs() <= 1e-13 * total);
    }

    #[test]
    fn closed_norm_matches_direct_sum_n30() {
        for q in reference_sets(30) {
            for n in 0..=30 {
                let closed = norm_sq(n, &q).unwrap();
                let brute = brute_norm_sq(n, &q);
                assert!(closed > 0.0);
                assert!((closed - brute).abs() <= 1e-10 * closed, "{q} n={n}");
            }
        }
    }

    #[test]
    fn normalized_examples() {
        let q = p(0.0, 0.0, 30);
        let v = eval_normalized(0, 12.5, &q).unwrap();
        assert!((v - 1.0 / 31f64.sqrt()).abs() < 1e-16);
        // N = 4: ||Q_1||^2 = (N+2)(N+1) / (3N) = 5/2
        let q = p(0.0, 0.0, 4);
        let v = eval_normalized(1, 0.0, &q).unwrap();
        assert!((v - (2.0f64 / 5.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn eigen_examples() {
        let q = p(0.0, 0.0, 30);
        assert_eq!(EigenData::new(0, &q).unwrap().lambda, 0.0);
        assert_eq!(EigenData::new(2, &q).unwrap().lambda, 6.0);
        for q in reference_sets(30) {
            let e = EigenData::new(3, &q).unwrap();
            assert_eq!(e.d(0.0), 0.0);
            assert_eq!(e.b(30.0), 0.0);
        }
    }

    #[test]
    fn lambda_strictly_increasing() {
        for q in reference_sets(30).into_iter().chain([p(-0.9, -0.9, 30)]) {
            for n in 1..30 {
                assert!(lambda(n + 1, &q) > lambda(n, &q));
            }
        }
    }

    #[test]
    fn eigen_equation_residual() {
        for q in reference_sets(20) {
            for n in 0..=20 {
                let e = EigenData::new(n, &q).unwrap();
                let vals: Vec<f64> = (0..=20).map(|x| eval_recurrence(n, x as f64, &q).unwrap()).collect();
                let scale = vals.iter().map(|v| (e.lambda * v).abs()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
                for x in 1..20 {
                    let xf = x as f64;
                    let lhs = e.b(xf) * vals[x + 1] - (e.b(xf) + e.d(xf)) * vals[x] + e.d(xf) * vals[x - 1];
                    let res = (lhs - e.lambda * vals[x]).abs();
                    assert!(res <= 1e-7 * scale.max(1e-300), "{q} n={n} x={x} res={res:e}");
                }
            }
        }
    }

    #[test]
    fn reflection_symmetry_for_equal_parameters() {
        for a in [0.0, 0.5] {
            let q = p(a, a, 30);
            let basis = HahnBasis::new(q).unwrap();
            let w = basis.weights();
            for n in 0..=30 {
                let v = basis.normalized(n).unwrap();
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                let dist: f64 = (0..=30).map(|i| (v[30 - i] - sign * v[i]).powi(2) * w.at(i)).sum::<f64>().sqrt();
                assert!(dist <= 1e-9, "a={a} n={n} dist={dist:e}");
            }
        }
    }
}
