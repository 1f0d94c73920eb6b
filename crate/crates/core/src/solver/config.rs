use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// How the shifted circulant and skew-circulant solves are carried out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum SolverBackend {
    /// Real arithmetic: butterflies, DCT/DST block transforms and cross-shaped cores.
    #[default]
    DctDst,
    /// Complex DFTs with diagonal eigenvalue scalings. Reference only.
    Fft,
}

impl SolverBackend {
    pub fn name(self) -> &'static str {
        match self {
            SolverBackend::DctDst => "dct_dst",
            SolverBackend::Fft => "fft",
        }
    }
}

impl std::fmt::Display for SolverBackend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SolverBackend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "dct_dst" | "dctdst" => Ok(SolverBackend::DctDst),
            "fft" => Ok(SolverBackend::Fft),
            other => Err(Error::InvalidConfig(format!("unknown backend '{other}'"))),
        }
    }
}

/// Parameters of one CSCS solve.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig<T> {
    pub theta: T,
    /// Stop once `‖r_k‖₂ / ‖r_0‖₂ ≤ tol`.
    pub tol: T,
    pub max_iters: usize,
    pub backend: SolverBackend,
    /// Zero vector when `None`.
    pub initial_guess: Option<Vec<T>>,
    /// Record every iterate in the report.
    pub keep_iterates: bool,
}

impl<T: Scalar> SolverConfig<T> {
    pub fn new(theta: T) -> Self {
        Self {
            theta,
            tol: T::lit(1e-7),
            max_iters: 500,
            backend: SolverBackend::default(),
            initial_guess: None,
            keep_iterates: false,
        }
    }

    pub fn with_backend(mut self, backend: SolverBackend) -> Self {
        self.backend = backend;
        self
    }

    pub fn with_tol(mut self, tol: T) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_max_iters(mut self, max_iters: usize) -> Self {
        self.max_iters = max_iters;
        self
    }

    pub fn with_initial_guess(mut self, x0: Vec<T>) -> Self {
        self.initial_guess = Some(x0);
        self
    }

    pub fn keeping_iterates(mut self) -> Self {
        self.keep_iterates = true;
        self
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if !(self.theta.is_finite() && self.theta > T::zero()) {
            return Err(Error::InvalidConfig(format!(
                "theta must be positive and finite, got {}",
                self.theta
            )));
        }
        if !(self.tol.is_finite() && self.tol > T::zero()) {
            return Err(Error::InvalidConfig(format!(
                "tol must be positive and finite, got {}",
                self.tol
            )));
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be at least 1".into()));
        }
        if let Some(x0) = &self.initial_guess {
            if x0.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: x0.len(),
                });
            }
        }
        Ok(())
    }
}

/// Outcome of [`cscs_solve`](super::cscs_solve).
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport<T> {
    pub solution: Vec<T>,
    pub iterations: usize,
    /// `‖r_k‖₂ / ‖r_0‖₂` after each full iteration.
    pub residuals: Vec<T>,
    pub converged: bool,
    pub warnings: Vec<String>,
    /// `x_1, x_2, …` when requested.
    pub iterates: Option<Vec<Vec<T>>>,
}

impl<T: Scalar> SolveReport<T> {
    pub fn final_residual(&self) -> Option<T> {
        self.residuals.last().copied()
    }
}
