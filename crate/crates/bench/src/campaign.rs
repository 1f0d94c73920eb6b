//! Benchmark campaigns: cells, TOML plans and the runner.

use std::path::Path;
use std::time::Instant;

use cscs_core::solver::RHO_DENSE_LIMIT;
use cscs_core::{cscs_solve, iteration_matrix_rho, SolverBackend, SolverConfig};
use rayon::prelude::*;
use serde::Deserialize;

use crate::error::BenchError;
use crate::problems::{gen_coeffs, Example, ProblemSpec};
use crate::report::BenchRow;

/// Default order up to which the dense spectral radius is computed in a
/// campaign. The solver's own guard is larger; this keeps campaigns fast.
pub const DEFAULT_RHO_MAX_N: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchCell {
    pub spec: ProblemSpec,
    pub theta: f64,
    pub backend: SolverBackend,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunOptions {
    pub tol: f64,
    pub max_iters: usize,
    /// Compute ρ for cells with `n` up to this order (0 disables).
    pub rho_max_n: usize,
    pub parallel: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            tol: 1e-7,
            max_iters: 500,
            rho_max_n: DEFAULT_RHO_MAX_N,
            parallel: true,
        }
    }
}

/// Solves `T x = ones` from `x⁰ = 0` for one cell. Errors are captured in
/// the row rather than returned.
pub fn run_cell(cell: &BenchCell, opts: &RunOptions) -> BenchRow {
    let start = Instant::now();
    let mut row = BenchRow {
        example: cell.spec.example.name().to_string(),
        n: cell.spec.n,
        p: cell.spec.reported_p(),
        theta: cell.theta,
        backend: cell.backend.name().to_string(),
        iterations: None,
        rel_residual: None,
        rho: None,
        elapsed_ms: 0.0,
        error: None,
    };
    let outcome = (|| -> Result<_, BenchError> {
        let t = gen_coeffs(&cell.spec)?;
        let cfg = SolverConfig::new(cell.theta)
            .with_backend(cell.backend)
            .with_tol(opts.tol)
            .with_max_iters(opts.max_iters);
        let rep = cscs_solve(&t, &vec![1.0; cell.spec.n], &cfg)?;
        Ok((t, rep))
    })();
    match outcome {
        Ok((t, rep)) => {
            row.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            row.iterations = Some(rep.iterations);
            row.rel_residual = Some(rep.final_residual().unwrap_or(0.0));
            if cell.spec.n <= opts.rho_max_n.min(RHO_DENSE_LIMIT) {
                match iteration_matrix_rho(&t, cell.theta) {
                    Ok(r) => row.rho = Some(r),
                    Err(e) => row.error = Some(format!("rho: {e}")),
                }
            }
        }
        Err(e) => {
            row.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            row.error = Some(e.to_string());
        }
    }
    row
}

/// Runs every cell; rows come back in input order whether or not the cells
/// ran in parallel.
pub fn run_bench(cells: &[BenchCell], opts: &RunOptions) -> Vec<BenchRow> {
    if opts.parallel {
        cells.par_iter().map(|c| run_cell(c, opts)).collect()
    } else {
        cells.iter().map(|c| run_cell(c, opts)).collect()
    }
}

/// A campaign file.
///
/// ```toml
/// tol = 1e-7
/// max_iters = 500
/// rho_max_n = 512
///
/// [[cell]]
/// example = "ex1"
/// n = [4000]
/// p = 0.9
/// theta = [1.985]
/// backend = ["dct_dst"]
/// ```
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchPlan {
    #[serde(default = "default_tol")]
    pub tol: f64,
    #[serde(default = "default_max_iters")]
    pub max_iters: usize,
    #[serde(default = "default_rho_max_n")]
    pub rho_max_n: usize,
    #[serde(default, rename = "cell")]
    pub cells: Vec<CellGroup>,
}

fn default_tol() -> f64 {
    1e-7
}

fn default_max_iters() -> usize {
    500
}

fn default_rho_max_n() -> usize {
    DEFAULT_RHO_MAX_N
}

/// Cartesian product `n × θ × backend` for one example.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellGroup {
    pub example: Example,
    pub n: Vec<usize>,
    #[serde(default)]
    pub p: Option<f64>,
    pub theta: Vec<f64>,
    #[serde(default = "default_backends")]
    pub backend: Vec<String>,
}

fn default_backends() -> Vec<String> {
    vec!["dct_dst".into()]
}

impl BenchPlan {
    pub fn parse(text: &str) -> Result<Self, BenchError> {
        toml::from_str(text).map_err(|e| BenchError::Config(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, BenchError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| BenchError::io(path, e))?;
        Self::parse(&text).map_err(|e| BenchError::Config(format!("{}: {e}", path.display())))
    }

    pub fn options(&self) -> Result<RunOptions, BenchError> {
        if !(self.tol.is_finite() && self.tol > 0.0) || self.max_iters == 0 {
            return Err(BenchError::Config(
                "tol must be positive and max_iters at least 1".into(),
            ));
        }
        Ok(RunOptions {
            tol: self.tol,
            max_iters: self.max_iters,
            rho_max_n: self.rho_max_n,
            parallel: true,
        })
    }

    /// Expands the groups in file order.
    pub fn expand(&self) -> Result<Vec<BenchCell>, BenchError> {
        let mut out = Vec::new();
        for g in &self.cells {
            let backends = g
                .backend
                .iter()
                .map(|b| b.parse::<SolverBackend>())
                .collect::<Result<Vec<_>, _>>()?;
            for &n in &g.n {
                let spec = ProblemSpec::new(g.example, n, g.p);
                spec.validate()?;
                for &theta in &g.theta {
                    if !(theta.is_finite() && theta > 0.0) {
                        return Err(BenchError::Config(format!(
                            "theta must be positive, got {theta}"
                        )));
                    }
                    for &backend in &backends {
                        out.push(BenchCell {
                            spec,
                            theta,
                            backend,
                        });
                    }
                }
            }
        }
        Ok(out)
    }
}
