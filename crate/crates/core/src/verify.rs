//! Invariant suite for one parameter set, used by `hahn verify`.

use std::fmt;

use crate::calculus::{sbp_residual, GridFunction, LDisk};
use crate::error::Result;
use crate::expansion::{decay_report, inner_product, IntervalMap};
use crate::functions::TestFunction;
use crate::hahn::{self, coef_b, coef_d, lambda, HahnBasis};
use crate::params::HahnParams;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub measured: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.measured <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub params: HahnParams,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "invariants for {}", self.params)?;
        writeln!(f, "{:<28} {:>12} {:>10}  status", "check", "measured", "tolerance")?;
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{:<28} {:>12.3e} {:>10.1e}  {status}", c.name, c.measured, c.tolerance)?;
        }
        Ok(())
    }
}

// Deterministic test vectors; only their genericity matters.
fn probe(params: HahnParams, seed: f64) -> GridFunction {
    GridFunction::from_fn(params, |i| {
        let x = i as f64;
        (seed * x * x + 0.37 * x + seed).sin() + 0.25 * (1.3 * seed * x).cos()
    })
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

pub fn run(params: HahnParams) -> Result<VerifyReport> {
    let big = params.n_max();
    let basis = HahnBasis::new(params)?;
    let w = basis.weights();
    let op = LDisk::new(w.clone());
    let mut checks = Vec::new();

    let mut off_diag = 0.0f64;
    let mut diag = 0.0f64;
    for n in 0..=big {
        let qn = GridFunction::new(params, basis.normalized(n)?.to_vec())?;
        for m in 0..=n {
            let qm = GridFunction::new(params, basis.normalized(m)?.to_vec())?;
            let ip = inner_product(&qn, &qm, w)?;
            if m == n {
                diag = diag.max((ip - 1.0).abs());
            } else {
                off_diag = off_diag.max(ip.abs());
            }
        }
    }
    checks.push(Check { name: "orthogonality (off-diag)", measured: off_diag, tolerance: 1e-7 });
    checks.push(Check { name: "normalization (diag)", measured: diag, tolerance: 1e-9 });

    let mut paths = 0.0f64;
    let mut norms = 0.0f64;
    for n in 0..=big {
        let mut direct = 0.0;
        for x in 0..=big {
            let s = hahn::eval_series(n, x as f64, &params)?;
            let r = hahn::eval_recurrence(n, x as f64, &params)?;
            paths = paths.max((s - r).abs() / s.abs().max(1.0));
            direct += r * r * w.at(x);
        }
        let closed = hahn::norm_sq(n, &params)?;
        norms = norms.max((closed - direct).abs() / closed);
    }
    checks.push(Check { name: "series vs recurrence", measured: paths, tolerance: 1e-9 });
    checks.push(Check { name: "closed-form norm", measured: norms, tolerance: 1e-10 });

    let mut eigen = 0.0f64;
    let mut selfadj = 0.0f64;
    for n in 0..=big.min(20) {
        let q: Vec<f64> = (0..=big).map(|x| hahn::eval_recurrence(n, x as f64, &params)).collect::<Result<_>>()?;
        let lam = lambda(n, &params);
        let coef_scale =
            (0..=big).map(|x| coef_b(x as f64, &params).abs() + coef_d(x as f64, &params).abs()).fold(0.0, f64::max);
        let scale = (lam * max_abs(&q)).max(f64::EPSILON * coef_scale * max_abs(&q));
        for x in 1..big {
            let xf = x as f64;
            let (b, d) = (coef_b(xf, &params), coef_d(xf, &params));
            let res = b * q[x + 1] - (b + d) * q[x] + d * q[x - 1] - lam * q[x];
            eigen = eigen.max(res.abs() / scale);
        }
        // Delta[-D omega Nabla Q~] + lambda omega Q~ with D(0) = 0, omega(N+1) = 0
        let qt = basis.normalized(n)?;
        let flux = |i: usize| -> f64 {
            if i == 0 || i > big {
                0.0
            } else {
                -coef_d(i as f64, &params) * w.at(i) * (qt[i] - qt[i - 1])
            }
        };
        let sa_scale = (0..=big).map(|i| (lam * w.at(i) * qt[i]).abs()).fold(0.0, f64::max);
        let sa_scale = sa_scale.max(f64::EPSILON * (0..=big + 1).map(|i| flux(i).abs()).fold(0.0, f64::max));
        for i in 0..=big {
            let res = flux(i + 1) - flux(i) + lam * w.at(i) * qt[i];
            if sa_scale > 0.0 {
                selfadj = selfadj.max(res.abs() / sa_scale);
            }
        }
    }
    checks.push(Check { name: "eigen equation residual", measured: eigen, tolerance: 1e-7 });
    checks.push(Check { name: "self-adjoint form residual", measured: selfadj, tolerance: 1e-7 });

    let u = probe(params, 0.71);
    let v = probe(params, 1.93);
    let lu = op.apply(&u)?;
    let lv = op.apply(&v)?;
    let ip_scale: f64 = (0..=big).map(|i| (lu[i] * v[i] * w.at(i)).abs() + (u[i] * lv[i] * w.at(i)).abs()).sum();
    let adj = (inner_product(&lu, &v, w)? - inner_product(&u, &lv, w)?).abs() / ip_scale;
    checks.push(Check { name: "operator self-adjointness", measured: adj, tolerance: 1e-9 });

    let coeffs = basis.project(&u, big)?;
    let energy: f64 = coeffs.coeffs().iter().map(|c| c * c).sum();
    let uu = inner_product(&u, &u, w)?;
    checks.push(Check { name: "Parseval", measured: (energy - uu).abs() / uu, tolerance: 1e-8 });

    let sbp_scale: f64 = (0..=big).map(|i| u[i].abs() * v[i].abs()).sum::<f64>() * 4.0;
    let sbp = sbp_residual(&u, &v, 0.5, -0.25)? / sbp_scale;
    checks.push(Check { name: "summation by parts", measured: sbp, tolerance: 1e-12 });

    let sin = IntervalMap::symmetric(big).sample(params, |t| TestFunction::SinPi.eval(t));
    let mut worst_bound = 0.0f64;
    let mut worst_identity = 0.0f64;
    for k in 1..=3 {
        for r in decay_report(&basis, &sin, k, 1..=big.min(10))? {
            worst_bound = worst_bound.max(r.actual / r.bound_exact - 1.0);
            worst_identity = worst_identity.max(r.identity_error);
        }
    }
    checks.push(Check { name: "decay bound excess", measured: worst_bound.max(0.0), tolerance: 1e-8 });
    checks.push(Check { name: "decay proof identity", measured: worst_identity, tolerance: 1e-6 });

    Ok(VerifyReport { params, checks })
}
