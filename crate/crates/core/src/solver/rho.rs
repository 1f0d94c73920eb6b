use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::structured::{cscs_split, Structured, ToeplitzBands};

/// Largest order accepted by [`iteration_matrix_rho`].
pub const RHO_DENSE_LIMIT: usize = 4096;

/// Spectral radius of `M(θ) = (θI+S)⁻¹(θI−C)(θI+C)⁻¹(θI−S)`, by dense LU and
/// a dense eigenvalue computation in `f64`.
pub fn iteration_matrix_rho<T: Scalar>(t: &ToeplitzBands<T>, theta: T) -> Result<f64> {
    let n = t.n();
    if n > RHO_DENSE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: RHO_DENSE_LIMIT,
        });
    }
    let theta = theta.to_f64_lossy();
    let (c, s) = cscs_split(t);
    let dense = |m: &dyn Structured<T>| DMatrix::from_fn(n, n, |i, j| m.entry(i, j).to_f64_lossy());
    let (c, s) = (dense(&c), dense(&s));
    let shift = DMatrix::<f64>::identity(n, n) * theta;

    let c_plus = (&shift + &c).lu();
    let s_plus = (&shift + &s).lu();
    let singular = |name: &str| Error::Singular(format!("θI + {name} at θ = {theta}"));
    let inner = c_plus.solve(&(&shift - &s)).ok_or_else(|| singular("C"))?;
    let m = s_plus
        .solve(&((&shift - &c) * inner))
        .ok_or_else(|| singular("S"))?;
    Ok(m.complex_eigenvalues()
        .iter()
        .fold(0.0f64, |acc, z| acc.max(z.norm())))
}
