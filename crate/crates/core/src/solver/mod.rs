//! CSCS iteration for real Toeplitz systems `T x = b`, with `T = C + S`.

mod config;
mod cscs;
mod fourier;
mod rho;
mod theta;

pub use config::{SolveReport, SolverBackend, SolverConfig};
pub use cscs::{cscs_solve, CscsSolver};
pub use rho::{iteration_matrix_rho, RHO_DENSE_LIMIT};
pub use theta::{contraction_factor, theta_scan, theta_scan_spectra, ThetaScan};
