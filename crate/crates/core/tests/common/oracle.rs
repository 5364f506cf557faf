//! Exact rational reference for Hahn values, weights, norms and inner
//! products. Slow and only meant for small grids.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use hahn_core::HahnParams;

pub type Q = BigRational;

pub const MAX_N: usize = 40;

pub fn int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

pub fn to_f64(q: &Q) -> f64 {
    q.to_f64().expect("rational out of f64 range")
}

/// Exact counterpart of the binary value of `x`.
pub fn from_f64(x: f64) -> Q {
    Q::from_float(x).expect("finite float")
}

#[derive(Debug, Clone)]
pub struct ExactParams {
    pub alpha: Q,
    pub beta: Q,
    pub n_max: usize,
}

impl ExactParams {
    pub fn new(alpha: Q, beta: Q, n_max: usize) -> Self {
        assert!(alpha > int(-1) && beta > int(-1), "alpha, beta must exceed -1");
        assert!((1..=MAX_N).contains(&n_max), "oracle grid size out of range");
        Self { alpha, beta, n_max }
    }

    pub fn float(&self) -> HahnParams {
        HahnParams::new(to_f64(&self.alpha), to_f64(&self.beta), self.n_max).unwrap()
    }
}

pub fn pochhammer(a: &Q, k: usize) -> Q {
    (0..k).fold(Q::one(), |acc, j| acc * (a + int(j as i64)))
}

fn factorial(k: usize) -> Q {
    pochhammer(&Q::one(), k)
}

/// Terminating sum for `Q_n(x)` at an integer grid point.
pub fn hahn_eval(n: usize, x: usize, p: &ExactParams) -> Q {
    assert!(n <= p.n_max && x <= p.n_max);
    let ab1 = &p.alpha + &p.beta + int(n as i64 + 1);
    let a1 = &p.alpha + Q::one();
    let mut term = Q::one();
    let mut sum = Q::one();
    for k in 0..n {
        let kq = int(k as i64);
        term = term * (int(k as i64 - n as i64)) * (&ab1 + &kq) * (int(k as i64 - x as i64))
            / ((&a1 + &kq) * int(k as i64 - p.n_max as i64) * int(k as i64 + 1));
        sum += &term;
    }
    sum
}

/// `Q_n` at an arbitrary rational point (the same sum, no grid restriction).
pub fn hahn_eval_at(n: usize, x: &Q, p: &ExactParams) -> Q {
    let ab1 = &p.alpha + &p.beta + int(n as i64 + 1);
    let a1 = &p.alpha + Q::one();
    let mut term = Q::one();
    let mut sum = Q::one();
    for k in 0..n {
        let kq = int(k as i64);
        term = term * int(k as i64 - n as i64) * (&ab1 + &kq) * (&kq - x)
            / ((&a1 + &kq) * int(k as i64 - p.n_max as i64) * int(k as i64 + 1));
        sum += &term;
    }
    sum
}

/// `C(alpha + x, x) C(beta + N - x, N - x)` as products of ratios.
pub fn weight(x: usize, p: &ExactParams) -> Q {
    let gen_binom = |top: &Q, k: usize| (1..=k).fold(Q::one(), |acc, j| acc * (top + int(j as i64)) / int(j as i64));
    gen_binom(&p.alpha, x) * gen_binom(&p.beta, p.n_max - x)
}

pub fn inner_product(n: usize, m: usize, p: &ExactParams) -> Q {
    (0..=p.n_max).fold(Q::zero(), |acc, x| acc + hahn_eval(n, x, p) * hahn_eval(m, x, p) * weight(x, p))
}

/// All `Q_n(x)` and `omega(x)` on one grid, for repeated inner products.
pub struct ExactBasis {
    pub values: Vec<Vec<Q>>,
    pub weights: Vec<Q>,
}

impl ExactBasis {
    pub fn new(p: &ExactParams) -> Self {
        let grid = 0..=p.n_max;
        let values = grid.clone().map(|n| grid.clone().map(|x| hahn_eval(n, x, p)).collect()).collect();
        let weights = grid.map(|x| weight(x, p)).collect();
        Self { values, weights }
    }

    pub fn inner_product(&self, n: usize, m: usize) -> Q {
        let (a, b) = (&self.values[n], &self.values[m]);
        self.weights.iter().enumerate().fold(Q::zero(), |acc, (x, w)| acc + &a[x] * &b[x] * w)
    }
}

/// The closed-form squared norm. At `n = 0` with `alpha + beta = -1` the
/// ratio `(a+b+1)_{N+1} / (a+b+1)` is taken as its limit `(a+b+2)_N`.
pub fn norm_sq_closed(n: usize, p: &ExactParams) -> Q {
    let big = p.n_max;
    let ab = &p.alpha + &p.beta;
    let lead = if n == 0 {
        pochhammer(&(&ab + int(2)), big)
    } else {
        pochhammer(&(&ab + int(n as i64 + 1)), big + 1) / (&ab + int(2 * n as i64 + 1))
    };
    let sign = if n % 2 == 0 { Q::one() } else { int(-1) };
    sign * lead * pochhammer(&(&p.beta + Q::one()), n) * factorial(n)
        / (pochhammer(&(&p.alpha + Q::one()), n) * pochhammer(&int(-(big as i64)), n) * factorial(big))
}

/// Equispaced polynomial interpolant of `values` at nodes `-1 + 2i/N`,
/// evaluated exactly at `t` via the Lagrange form.
pub fn equispaced_interpolant(values: &[Q], t: &Q) -> Q {
    let big = values.len() - 1;
    let node = |i: usize| frac(2 * i as i64 - big as i64, big as i64);
    let mut acc = Q::zero();
    for (i, v) in values.iter().enumerate() {
        let xi = node(i);
        let mut basis = Q::one();
        for j in 0..=big {
            if j != i {
                let xj = node(j);
                basis = basis * (t - &xj) / (&xi - &xj);
            }
        }
        acc += basis * v;
    }
    acc
}

/// `1 / (1 + 25 t^2)` in rationals.
pub fn runge(t: &Q) -> Q {
    (Q::one() + int(25) * t * t).recip()
}

pub fn rel_or_abs_error(float: f64, exact: &Q) -> f64 {
    let e = to_f64(exact);
    let diff = to_f64(&(from_f64(float) - exact)).abs();
    if exact.is_zero() {
        diff
    } else {
        diff / e.abs()
    }
}

pub fn abs(q: &Q) -> Q {
    q.abs()
}
