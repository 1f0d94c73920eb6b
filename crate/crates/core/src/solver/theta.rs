use crate::error::{Error, Result};
use crate::matvec::ToeplitzOperator;
use crate::scalar::Scalar;
use crate::schur::SpectralPair;
use crate::structured::ToeplitzBands;

/// Result of evaluating the contraction bound over a grid of shifts.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaScan<T> {
    pub theta_best: T,
    pub bound_best: T,
    /// `(θ, bound)` for every grid point, in grid order.
    pub bounds: Vec<(T, T)>,
}

/// `max_k |θ − λ_k| / |θ + λ_k|` over one spectrum.
pub fn contraction_factor<T: Scalar>(sp: &SpectralPair<T>, theta: T) -> T {
    sp.eigenvalues().iter().fold(T::zero(), |acc, z| {
        let num = (theta - z.re).hypot(z.im);
        let den = (theta + z.re).hypot(z.im);
        acc.max(num / den)
    })
}

/// Evaluates the product of the circulant and skew-circulant factor bounds
/// on `grid` and returns the minimizer, ties going to the smallest `θ`.
pub fn theta_scan_spectra<T: Scalar>(
    c: &SpectralPair<T>,
    s: &SpectralPair<T>,
    grid: &[T],
) -> Result<ThetaScan<T>> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if let Some(bad) = grid.iter().find(|g| !(g.is_finite() && **g > T::zero())) {
        return Err(Error::InvalidConfig(format!(
            "theta grid values must be positive, got {bad}"
        )));
    }
    let bounds: Vec<(T, T)> = grid
        .iter()
        .map(|&th| (th, contraction_factor(c, th) * contraction_factor(s, th)))
        .collect();
    let (theta_best, bound_best) = bounds
        .iter()
        .copied()
        .fold(None, |best: Option<(T, T)>, (th, b)| match best {
            Some((bt, bb)) if bb < b || (bb == b && bt <= th) => Some((bt, bb)),
            _ => Some((th, b)),
        })
        .expect("nonempty grid");
    Ok(ThetaScan {
        theta_best,
        bound_best,
        bounds,
    })
}

/// [`theta_scan_spectra`] on the splitting of `t`.
pub fn theta_scan<T: Scalar>(t: &ToeplitzBands<T>, grid: &[T]) -> Result<ThetaScan<T>> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let op = ToeplitzOperator::new(t)?;
    theta_scan_spectra(op.circulant.spectrum(), op.skew.spectrum(), grid)
}
