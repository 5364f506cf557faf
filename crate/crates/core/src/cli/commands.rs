use std::io::Write;

use super::csv_doc::{num, CsvDoc};
use super::{CliError, Command, RunConfig};
use crate::calculus::GridFunction;
use crate::expansion::{decay_report, CoefficientVector, IntervalMap};
use crate::functions::TestFunction;
use crate::hahn::{self, HahnBasis};
use crate::legendre::legendre_coeffs;
use crate::params::HahnParams;
use crate::verify;

/// Everything a command produced; nothing is written until the command
/// has finished successfully.
#[derive(Debug, Default)]
pub struct Output {
    pub body: String,
    pub plot: Option<String>,
    pub warnings: Vec<String>,
    /// Set when the data was produced but an invariant check failed.
    pub violation: Option<String>,
}

impl Output {
    pub fn write(&self, cfg: &RunConfig) -> Result<(), CliError> {
        match &cfg.out {
            Some(path) => std::fs::write(path, &self.body)?,
            None => std::io::stdout().lock().write_all(self.body.as_bytes())?,
        }
        if let (Some(path), Some(script)) = (&cfg.plot_script, &self.plot) {
            std::fs::write(path, script)?;
        }
        Ok(())
    }
}

fn command_name(c: Command) -> &'static str {
    match c {
        Command::Weights => "weights",
        Command::Eval => "eval",
        Command::Project => "project",
        Command::Decay => "decay",
        Command::Runge => "runge",
        Command::CompareLegendre => "compare-legendre",
        Command::Verify => "verify",
    }
}

fn metadata(doc: &mut CsvDoc, cfg: &RunConfig) {
    let (a, b) = cfg.interval.bounds();
    let sets: Vec<String> = cfg.sets.iter().map(|p| p.to_string()).collect();
    doc.comment(format!("hahn {}", env!("CARGO_PKG_VERSION")));
    doc.comment(format!("command: {}", command_name(cfg.command)));
    doc.comment(format!("params: {}", sets.join("; ")));
    doc.comment(format!("fn: {}", cfg.function));
    doc.comment(format!("interval: {a},{b}"));
    doc.comment(format!("m: {}", cfg.m));
    doc.comment(format!("basis: {}", if cfg.normalized { "normalized" } else { "unnormalized" }));
}

fn plot_stub(cfg: &RunConfig, x_col: usize, first: usize, last: usize, logscale: bool) -> String {
    let data = cfg.out.as_ref().map(|p| p.display().to_string()).unwrap_or_else(|| "data.csv".into());
    let mut s =
        String::from("set datafile separator ','\nset datafile commentschars '#'\nset key autotitle columnhead\n");
    if logscale {
        s.push_str("set logscale y\nset format y '%.0e'\n");
        s.push_str(&format!("plot for [c={first}:{last}] '{data}' using {x_col}:(abs(column(c))) with linespoints\n"));
    } else {
        s.push_str(&format!("plot for [c={first}:{last}] '{data}' using {x_col}:c with lines\n"));
    }
    s
}

fn sample_points(cfg: &RunConfig, n_max: usize) -> Vec<f64> {
    let s = cfg.samples;
    (0..s).map(|j| n_max as f64 * j as f64 / (s - 1) as f64).collect()
}

fn coefficients(cfg: &RunConfig, c: &CoefficientVector) -> Result<Vec<f64>, CliError> {
    Ok(if cfg.normalized { c.coeffs().to_vec() } else { c.unnormalized()? })
}

pub fn run_command(cfg: &RunConfig) -> Result<Output, CliError> {
    match cfg.command {
        Command::Weights => cmd_weights(cfg),
        Command::Eval => cmd_eval(cfg),
        Command::Project => cmd_project(cfg),
        Command::Decay => cmd_decay(cfg),
        Command::Runge => cmd_runge(cfg),
        Command::CompareLegendre => cmd_compare_legendre(cfg),
        Command::Verify => cmd_verify(cfg),
    }
}

fn cmd_weights(cfg: &RunConfig) -> Result<Output, CliError> {
    let tables = cfg.sets.iter().map(|p| hahn::WeightTable::new(*p)).collect::<Result<Vec<_>, _>>()?;
    let mut doc = CsvDoc::new();
    metadata(&mut doc, cfg);
    for t in &tables {
        doc.comment(format!("total[{}]: {}", t.params().label(), num(t.total())));
    }
    let mut header = vec!["i".to_string(), "t".to_string()];
    header.extend(cfg.sets.iter().map(|p| format!("omega@{}", p.label())));
    let n_max = cfg.sets[0].n_max();
    let rows = (0..=n_max).map(|i| {
        let mut row = vec![i.to_string(), num(cfg.interval.node(i))];
        row.extend(tables.iter().map(|t| num(t.at(i))));
        row
    });
    doc.table(&header, rows)?;
    let plot = plot_stub(cfg, 1, 3, 2 + tables.len(), true);
    Ok(Output { body: doc.into_string(), plot: Some(plot), ..Default::default() })
}

fn cmd_eval(cfg: &RunConfig) -> Result<Output, CliError> {
    let n_max = cfg.sets[0].n_max();
    let xs = sample_points(cfg, n_max);
    let mut columns: Vec<Vec<f64>> = Vec::new();
    let mut header = vec!["x".to_string(), "t".to_string()];
    for p in &cfg.sets {
        let norms = (0..=cfg.m).map(|n| hahn::norm_sq(n, p).map(f64::sqrt)).collect::<Result<Vec<_>, _>>()?;
        let mut cols = vec![Vec::with_capacity(xs.len()); cfg.m + 1];
        for &x in &xs {
            for (n, q) in hahn::eval_all(cfg.m, x, p)?.into_iter().enumerate() {
                cols[n].push(if cfg.normalized { q / norms[n] } else { q });
            }
        }
        header.extend((0..=cfg.m).map(|n| format!("q{n}@{}", p.label())));
        columns.extend(cols);
    }
    let mut doc = CsvDoc::new();
    metadata(&mut doc, cfg);
    let rows = xs.iter().enumerate().map(|(j, &x)| {
        let mut row = vec![num(x), num(cfg.interval.to_target(x))];
        row.extend(columns.iter().map(|c| num(c[j])));
        row
    });
    doc.table(&header, rows)?;
    let plot = plot_stub(cfg, 2, 3, header.len(), false);
    Ok(Output { body: doc.into_string(), plot: Some(plot), ..Default::default() })
}

fn sample(cfg: &RunConfig, p: &HahnParams) -> GridFunction {
    cfg.interval.sample(*p, |t| cfg.function.eval(t))
}

fn cmd_project(cfg: &RunConfig) -> Result<Output, CliError> {
    let mut expansions = Vec::new();
    for p in &cfg.sets {
        let basis = HahnBasis::new(*p)?;
        expansions.push(basis.project(&sample(cfg, p), cfg.m)?);
    }
    let mut doc = CsvDoc::new();
    metadata(&mut doc, cfg);
    let mut header = vec!["n".to_string()];
    let mut columns = Vec::new();
    for (p, c) in cfg.sets.iter().zip(&expansions) {
        header.push(format!("u_hat@{}", p.label()));
        header.push(format!("abs_u_hat@{}", p.label()));
        columns.push(coefficients(cfg, c)?);
    }
    let rows = (0..=cfg.m).map(|n| {
        let mut row = vec![n.to_string()];
        for col in &columns {
            row.push(num(col[n]));
            row.push(num(col[n].abs()));
        }
        row
    });
    doc.table(&header, rows)?;

    if cfg.pointwise {
        let n_max = cfg.sets[0].n_max();
        let xs = sample_points(cfg, n_max);
        let mut header = vec!["t".to_string(), "u".to_string()];
        let mut cols = Vec::new();
        for (p, c) in cfg.sets.iter().zip(&expansions) {
            header.push(format!("Pm_u@{}", p.label()));
            header.push(format!("error@{}", p.label()));
            cols.push(xs.iter().map(|&x| c.eval(x)).collect::<Result<Vec<_>, _>>()?);
        }
        doc.comment("section: pointwise");
        let rows = xs.iter().enumerate().map(|(j, &x)| {
            let t = cfg.interval.to_target(x);
            let u = cfg.function.eval(t);
            let mut row = vec![num(t), num(u)];
            for col in &cols {
                row.push(num(col[j]));
                row.push(num(u - col[j]));
            }
            row
        });
        doc.table(&header, rows)?;
    }
    let plot = plot_stub(cfg, 1, 3, 1 + 2 * cfg.sets.len(), true);
    Ok(Output { body: doc.into_string(), plot: Some(plot), ..Default::default() })
}

fn cmd_decay(cfg: &RunConfig) -> Result<Output, CliError> {
    let mut doc = CsvDoc::new();
    metadata(&mut doc, cfg);
    doc.comment(format!("k: {:?}", cfg.ks));
    let header: Vec<String> =
        ["params", "k", "n", "abs_u_hat", "bound_exact", "bound_power", "identity_error"].map(String::from).to_vec();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for p in &cfg.sets {
        let basis = HahnBasis::new(*p)?;
        let u = sample(cfg, p);
        for &k in &cfg.ks {
            let start = if k == 0 { 0 } else { 1 };
            for r in decay_report(&basis, &u, k, start..=cfg.m)? {
                if !r.bound_holds() {
                    failures.push(format!(
                        "{} k={} n={}: |u_hat|={:e} > bound {:e}",
                        p.label(),
                        k,
                        r.n,
                        r.actual,
                        r.bound_exact
                    ));
                }
                if !r.identity_holds() {
                    failures.push(format!(
                        "{} k={} n={}: proof identity error {:e}",
                        p.label(),
                        k,
                        r.n,
                        r.identity_error
                    ));
                }
                rows.push(vec![
                    p.label(),
                    k.to_string(),
                    r.n.to_string(),
                    num(r.actual),
                    num(r.bound_exact),
                    num(r.bound_power),
                    num(r.identity_error),
                ]);
            }
        }
    }
    doc.table(&header, rows)?;
    let violation = (!failures.is_empty()).then(|| failures.join("; "));
    let plot = plot_stub(cfg, 3, 4, 6, true);
    Ok(Output { body: doc.into_string(), plot: Some(plot), violation, ..Default::default() })
}

/// Largest `|P_m u - u|` over the samples and where it occurs.
fn max_error(ts: &[f64], errors: &[f64]) -> (f64, f64) {
    ts.iter().zip(errors).fold((0.0, f64::NAN), |(m, at), (&t, &e)| if e.abs() > m { (e.abs(), t) } else { (m, at) })
}

fn cmd_runge(cfg: &RunConfig) -> Result<Output, CliError> {
    let n_max = cfg.sets[0].n_max();
    let xs = sample_points(cfg, n_max);
    let ts: Vec<f64> = xs.iter().map(|&x| cfg.interval.to_target(x)).collect();
    let g: Vec<f64> = ts.iter().map(|&t| cfg.function.eval(t)).collect();
    let mut header = vec!["t".to_string(), "g".to_string()];
    let mut cols = Vec::new();
    let mut summary = Vec::new();
    let mut failures = Vec::new();
    for p in &cfg.sets {
        let basis = HahnBasis::new(*p)?;
        let u = sample(cfg, p);
        let c = basis.project(&u, cfg.m)?;
        let approx = xs.iter().map(|&x| c.eval(x)).collect::<Result<Vec<_>, _>>()?;
        let errors: Vec<f64> = approx.iter().zip(&g).map(|(a, b)| a - b).collect();
        let (worst, at) = max_error(&ts, &errors);
        let grid_err =
            (0..=n_max).map(|i| c.eval(i as f64).map(|v| (v - u[i]).abs())).collect::<Result<Vec<_>, _>>()?;
        let grid_err = grid_err.into_iter().fold(0.0, f64::max);
        summary.push(format!(
            "summary[{}]: max_abs_error={} at t={} grid_max_error={}",
            p.label(),
            num(worst),
            num(at),
            num(grid_err)
        ));
        if cfg.m == n_max && grid_err > 1e-8 * u.max_abs() {
            failures.push(format!("{}: full-degree projection misses grid data by {grid_err:e}", p.label()));
        }
        header.push(format!("Pm_g@{}", p.label()));
        header.push(format!("error@{}", p.label()));
        cols.push((approx, errors));
    }
    let mut doc = CsvDoc::new();
    metadata(&mut doc, cfg);
    let rows = (0..xs.len()).map(|j| {
        let mut row = vec![num(ts[j]), num(g[j])];
        for (a, e) in &cols {
            row.push(num(a[j]));
            row.push(num(e[j]));
        }
        row
    });
    doc.table(&header, rows)?;
    for line in &summary {
        doc.comment(line);
    }
    let violation = (!failures.is_empty()).then(|| failures.join("; "));
    let plot = plot_stub(cfg, 1, 2, header.len(), false);
    Ok(Output { body: doc.into_string(), plot: Some(plot), violation, ..Default::default() })
}

/// Legendre coefficients of `f` on `interval` (mapped to `[-1, 1]`) and the
/// Hahn coefficients of the same function against unnormalized `Q_n`,
/// both through degree `m`.
pub fn compare_legendre(
    f: &TestFunction,
    params: &HahnParams,
    m: usize,
    interval: &IntervalMap,
) -> Result<(Vec<f64>, CoefficientVector), CliError> {
    let (a, b) = interval.bounds();
    let legendre = legendre_coeffs(|s| f.eval(a + (b - a) * (s + 1.0) / 2.0), m)?;
    let basis = HahnBasis::new(*params)?;
    let hahn = basis.project(&interval.sample(*params, |t| f.eval(t)), m)?;
    Ok((legendre, hahn))
}

/// Odd degrees `n >= from` at which `|hahn_n|` exceeds `|legendre_n|`.
pub fn odd_tail_excess(hahn: &[f64], legendre: &[f64], from: usize) -> Vec<usize> {
    (from..hahn.len().min(legendre.len())).filter(|n| n % 2 == 1 && hahn[*n].abs() > legendre[*n].abs()).collect()
}

fn cmd_compare_legendre(cfg: &RunConfig) -> Result<Output, CliError> {
    let mut header = vec!["n".to_string(), "legendre".to_string(), "abs_legendre".to_string()];
    let mut legendre = Vec::new();
    let mut cols = Vec::new();
    let mut warnings = Vec::new();
    for p in &cfg.sets {
        let (leg, hahn) = compare_legendre(&cfg.function, p, cfg.m, &cfg.interval)?;
        let unnormalized = hahn.unnormalized()?;
        let above = odd_tail_excess(&unnormalized, &leg, 5);
        if !above.is_empty() {
            warnings
                .push(format!("{}: unnormalized Hahn coefficients exceed Legendre at odd n = {above:?}", p.label()));
        }
        header.push(format!("hahn@{}", p.label()));
        header.push(format!("abs_hahn@{}", p.label()));
        cols.push(if cfg.normalized { hahn.coeffs().to_vec() } else { unnormalized });
        legendre = leg;
    }
    let mut doc = CsvDoc::new();
    metadata(&mut doc, cfg);
    doc.comment("legendre: f_hat_n = (2n+1)/2 int f P_n over [-1,1]");
    let rows = (0..=cfg.m).map(|n| {
        let mut row = vec![n.to_string(), num(legendre[n]), num(legendre[n].abs())];
        for col in &cols {
            row.push(num(col[n]));
            row.push(num(col[n].abs()));
        }
        row
    });
    doc.table(&header, rows)?;
    let plot = plot_stub(cfg, 1, 2, header.len(), true);
    Ok(Output { body: doc.into_string(), plot: Some(plot), warnings, ..Default::default() })
}

fn cmd_verify(cfg: &RunConfig) -> Result<Output, CliError> {
    let mut body = String::new();
    let mut failed = Vec::new();
    for p in &cfg.sets {
        let report = verify::run(*p)?;
        body.push_str(&report.to_string());
        body.push('\n');
        if !report.all_passed() {
            failed.push(p.to_string());
        }
    }
    let violation = (!failed.is_empty()).then(|| format!("invariant suite failed for {}", failed.join("; ")));
    Ok(Output { body, violation, ..Default::default() })
}
