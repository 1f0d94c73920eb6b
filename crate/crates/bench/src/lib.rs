//! Test problems, benchmark campaigns, reports and the command line for the
//! CSCS Toeplitz solver.

pub mod campaign;
pub mod cli;
pub mod error;
pub mod problems;
pub mod report;
pub mod vector_io;

pub use campaign::{run_bench, BenchCell, BenchPlan, RunOptions};
pub use error::BenchError;
pub use problems::{gen_coeffs, Example, ProblemSpec};
pub use report::{BenchRow, CSV_HEADER};
