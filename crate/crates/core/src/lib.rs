//! Fast real-arithmetic solvers for Toeplitz systems.
//!
//! A real Toeplitz matrix splits as `T = C + S` into a circulant and a
//! skew-circulant part. Both have real Schur forms whose orthogonal factors
//! reduce, after an `O(n)` butterfly, to one DCT and one DST of about half
//! the size. This crate provides those transforms, the factorizations, the
//! resulting `O(n log n)` products and the CSCS stationary iteration.
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the `*64` aliases
//! below fix the double-precision case.

pub mod dense;
pub mod dtt;
pub mod error;
pub mod fft;
pub mod matvec;
pub mod scalar;
pub mod schur;
pub mod solver;
pub mod structured;

pub use dense::DenseMatrix;
pub use dtt::{dtt_apply, dtt_matrix, Backend, DttKind, DttPlan, Family, Flavor};
pub use error::{Error, Result};
pub use fft::{dft, FftPlan};
pub use matvec::{
    circulant_matvec, skew_circulant_matvec, toeplitz_matvec, CirculantOperator, ToeplitzOperator,
};
pub use scalar::Scalar;
pub use schur::{real_spectrum, Side, SpectralPair, XPattern};
pub use solver::{
    cscs_solve, iteration_matrix_rho, theta_scan, CscsSolver, SolveReport, SolverBackend,
    SolverConfig, ThetaScan,
};
pub use structured::{cscs_split, CirculantCol, SkewCirculantCol, Structured, ToeplitzBands};

pub type ToeplitzBands64 = ToeplitzBands<f64>;
pub type CirculantCol64 = CirculantCol<f64>;
pub type SkewCirculantCol64 = SkewCirculantCol<f64>;
pub type SpectralPair64 = SpectralPair<f64>;
pub type XPattern64 = XPattern<f64>;
pub type SolverConfig64 = SolverConfig<f64>;
pub type SolveReport64 = SolveReport<f64>;
pub type CscsSolver64 = CscsSolver<f64>;
pub type ToeplitzOperator64 = ToeplitzOperator<f64>;

pub type ToeplitzBands32 = ToeplitzBands<f32>;
pub type SolverConfig32 = SolverConfig<f32>;
pub type SolveReport32 = SolveReport<f32>;
