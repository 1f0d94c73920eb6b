//! Command-line surface of the `cscs` binary.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cscs_core::{
    cscs_solve, iteration_matrix_rho, theta_scan, SolverBackend, SolverConfig, SpectralPair,
    ToeplitzBands, ToeplitzOperator,
};

use crate::campaign::{run_bench, BenchCell, BenchPlan, RunOptions, DEFAULT_RHO_MAX_N};
use crate::error::BenchError;
use crate::problems::{gen_coeffs, Example, ProblemSpec};
use crate::report::{to_markdown, write_csv};
use crate::vector_io::{format_value, read_vector, write_vector};

#[derive(Debug, Parser)]
#[command(
    name = "cscs",
    version,
    about = "CSCS iteration for real Toeplitz systems"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve T x = b (b = ones unless --rhs is given).
    Solve(SolveArgs),
    /// Print the eigenvalues of the circulant and skew-circulant parts.
    Spectrum(ProblemArgs),
    /// Spectral radius of the iteration matrix (dense; small n only).
    Radius(RadiusArgs),
    /// Run a benchmark campaign and print a report.
    Bench(BenchArgs),
    /// Evaluate the contraction bound over a grid of shifts.
    ThetaScan(ScanArgs),
}

#[derive(Debug, Args)]
pub struct ProblemArgs {
    /// Built-in test problem (ex1, ex2, ex3).
    #[arg(
        long,
        conflicts_with = "bands_file",
        required_unless_present = "bands_file"
    )]
    pub example: Option<Example>,
    /// Order of the built-in problem.
    #[arg(long, requires = "example")]
    pub n: Option<usize>,
    /// Decay exponent for ex1.
    #[arg(long)]
    pub p: Option<f64>,
    /// Vector file holding t_{-(n-1)}, ..., t_{n-1}.
    #[arg(long)]
    pub bands_file: Option<PathBuf>,
}

impl ProblemArgs {
    pub fn bands(&self) -> Result<ToeplitzBands<f64>, BenchError> {
        match (&self.example, &self.bands_file) {
            (Some(ex), None) => {
                let n = self
                    .n
                    .ok_or_else(|| BenchError::Config("--n is required with --example".into()))?;
                gen_coeffs(&ProblemSpec::new(*ex, n, self.p))
            }
            (None, Some(path)) => Ok(ToeplitzBands::from_bands(read_vector(path)?)?),
            _ => Err(BenchError::Config(
                "give exactly one of --example or --bands-file".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BackendArg {
    DctDst,
    Fft,
}

impl From<BackendArg> for SolverBackend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::DctDst => SolverBackend::DctDst,
            BackendArg::Fft => SolverBackend::Fft,
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long)]
    pub theta: f64,
    #[arg(long, default_value_t = 1e-7)]
    pub tol: f64,
    #[arg(long, default_value_t = 500)]
    pub maxit: usize,
    #[arg(long, value_enum, default_value = "dct-dst")]
    pub backend: BackendArg,
    /// Right-hand side vector file.
    #[arg(long)]
    pub rhs: Option<PathBuf>,
    /// Write the solution vector here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RadiusArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long)]
    pub theta: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Csv,
    Md,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// TOML campaign file.
    #[arg(long, conflicts_with = "cell")]
    pub config: Option<PathBuf>,
    /// Cell as `EXAMPLE,n=N[,p=P],theta=T[,backend=B]`; repeatable.
    #[arg(long)]
    pub cell: Vec<String>,
    #[arg(long, default_value_t = 1e-7)]
    pub tol: f64,
    #[arg(long, default_value_t = 500)]
    pub maxit: usize,
    /// Largest n for which the dense spectral radius is computed.
    #[arg(long, default_value_t = DEFAULT_RHO_MAX_N)]
    pub rho_max_n: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Run cells one after another.
    #[arg(long)]
    pub serial: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// `start:stop:steps`, endpoints included.
    #[arg(long)]
    pub grid: String,
}

/// Parses `start:stop:steps` into `steps` evenly spaced points.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, BenchError> {
    let bad = || BenchError::Config(format!("grid '{s}' is not start:stop:steps"));
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, k] = parts.as_slice() else {
        return Err(bad());
    };
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    let k: usize = k.trim().parse().map_err(|_| bad())?;
    Ok(match k {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..k)
            .map(|i| a + (b - a) * i as f64 / (k - 1) as f64)
            .collect(),
    })
}

/// Parses one `--cell` value.
pub fn parse_cell(s: &str) -> Result<BenchCell, BenchError> {
    let bad = |msg: String| BenchError::Config(format!("cell '{s}': {msg}"));
    let mut fields = s.split(',').map(str::trim);
    let example: Example = fields.next().unwrap_or_default().parse()?;
    let (mut n, mut p, mut theta, mut backend) = (None, None, None, SolverBackend::DctDst);
    for f in fields {
        let (k, v) = f
            .split_once('=')
            .ok_or_else(|| bad(format!("expected key=value, got '{f}'")))?;
        let num = |v: &str| {
            v.parse::<f64>()
                .map_err(|_| bad(format!("bad number '{v}'")))
        };
        match k {
            "n" => {
                n = Some(
                    v.parse::<usize>()
                        .map_err(|_| bad(format!("bad n '{v}'")))?,
                )
            }
            "p" => p = Some(num(v)?),
            "theta" => theta = Some(num(v)?),
            "backend" => {
                backend = v
                    .parse()
                    .map_err(|e: cscs_core::Error| bad(e.to_string()))?
            }
            other => return Err(bad(format!("unknown key '{other}'"))),
        }
    }
    let spec = ProblemSpec::new(example, n.ok_or_else(|| bad("missing n".into()))?, p);
    spec.validate()?;
    let theta = theta.ok_or_else(|| bad("missing theta".into()))?;
    if !(theta.is_finite() && theta > 0.0) {
        return Err(bad(format!("theta must be positive, got {theta}")));
    }
    Ok(BenchCell {
        spec,
        theta,
        backend,
    })
}

fn print_spectrum(out: &mut impl Write, part: &str, sp: &SpectralPair<f64>) -> std::io::Result<()> {
    for (k, z) in sp.eigenvalues().iter().enumerate() {
        writeln!(
            out,
            "{part},{k},{},{}",
            format_value(z.re),
            format_value(z.im)
        )?;
    }
    Ok(())
}

fn io_err(e: std::io::Error) -> BenchError {
    BenchError::io("<stdout>", e)
}

/// Runs one parsed command, writing results to `out`.
pub fn run(cli: Cli, out: &mut impl Write) -> Result<(), BenchError> {
    match cli.command {
        Command::Solve(a) => {
            let t = a.problem.bands()?;
            let b = match &a.rhs {
                Some(p) => read_vector(p)?,
                None => vec![1.0; t.n()],
            };
            let cfg = SolverConfig::new(a.theta)
                .with_tol(a.tol)
                .with_max_iters(a.maxit)
                .with_backend(a.backend.into());
            let rep = cscs_solve(&t, &b, &cfg)?;
            for w in &rep.warnings {
                eprintln!("warning: {w}");
            }
            writeln!(out, "n = {}", t.n()).map_err(io_err)?;
            writeln!(out, "iterations = {}", rep.iterations).map_err(io_err)?;
            writeln!(out, "converged = {}", rep.converged).map_err(io_err)?;
            writeln!(
                out,
                "rel_residual = {:e}",
                rep.final_residual().unwrap_or(0.0)
            )
            .map_err(io_err)?;
            if let Some(path) = &a.out {
                write_vector(path, &rep.solution)?;
            }
            if !rep.converged {
                return Err(BenchError::NotConverged(format!(
                    "no convergence after {} iterations",
                    rep.iterations
                )));
            }
        }
        Command::Spectrum(a) => {
            let op = ToeplitzOperator::new(&a.bands()?)?;
            writeln!(out, "part,k,re,im").map_err(io_err)?;
            print_spectrum(out, "C", op.circulant.spectrum()).map_err(io_err)?;
            print_spectrum(out, "S", op.skew.spectrum()).map_err(io_err)?;
        }
        Command::Radius(a) => {
            let rho = iteration_matrix_rho(&a.problem.bands()?, a.theta)?;
            writeln!(out, "{}", format_value(rho)).map_err(io_err)?;
        }
        Command::Bench(a) => {
            let (cells, opts) = match &a.config {
                Some(path) => {
                    let plan = BenchPlan::load(path)?;
                    (plan.expand()?, plan.options()?)
                }
                None => {
                    let cells = a
                        .cell
                        .iter()
                        .map(|c| parse_cell(c))
                        .collect::<Result<Vec<_>, _>>()?;
                    if !(a.tol.is_finite() && a.tol > 0.0) || a.maxit == 0 {
                        return Err(BenchError::Config(
                            "tol must be positive and maxit at least 1".into(),
                        ));
                    }
                    let opts = RunOptions {
                        tol: a.tol,
                        max_iters: a.maxit,
                        rho_max_n: a.rho_max_n,
                        parallel: true,
                    };
                    (cells, opts)
                }
            };
            let rows = run_bench(
                &cells,
                &RunOptions {
                    parallel: !a.serial,
                    ..opts
                },
            );
            let mut buf = Vec::new();
            match a.format {
                Format::Csv => write_csv(&mut buf, &rows)?,
                Format::Md => buf.extend_from_slice(to_markdown(&rows).as_bytes()),
            }
            match &a.out {
                Some(path) => std::fs::write(path, &buf).map_err(|e| BenchError::io(path, e))?,
                None => out.write_all(&buf).map_err(io_err)?,
            }
            let failed: Vec<String> = rows
                .iter()
                .filter(|r| r.failed())
                .map(|r| {
                    format!(
                        "{} n={} theta={}: {}",
                        r.example,
                        r.n,
                        r.theta,
                        r.error.as_deref().unwrap_or("failed")
                    )
                })
                .collect();
            if !failed.is_empty() {
                return Err(BenchError::NotConverged(format!(
                    "{} cell(s) failed: {}",
                    failed.len(),
                    failed.join("; ")
                )));
            }
        }
        Command::ThetaScan(a) => {
            let grid = parse_grid(&a.grid)?;
            let scan = theta_scan(&a.problem.bands()?, &grid)?;
            writeln!(out, "theta,bound").map_err(io_err)?;
            for (th, b) in &scan.bounds {
                writeln!(out, "{},{}", format_value(*th), format_value(*b)).map_err(io_err)?;
            }
            writeln!(
                out,
                "# best theta = {} (bound {})",
                format_value(scan.theta_best),
                format_value(scan.bound_best)
            )
            .map_err(io_err)?;
        }
    }
    Ok(())
}
