use num_complex::Complex;

use super::{apply_q, BlockTransform, Side, XPattern};
use crate::error::{check_len, Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Compressed real spectrum `λ_k = α_k + iβ_k` of a real circulant or
/// skew-circulant matrix of order `n = 2m` or `2m + 1`.
///
/// | kind      | parity | `alphas`        | `betas`               |
/// |-----------|--------|-----------------|-----------------------|
/// | circulant | even   | α₀ … α_m        | β₁ … β_{m−1}          |
/// | circulant | odd    | α₀ … α_m        | β₁ … β_m              |
/// | skew      | even   | α̃₀ … α̃_{m−1}   | β̃₀ … β̃_{m−1}        |
/// | skew      | odd    | α̃₀ … α̃_m       | β̃₀ … β̃_{m−1}        |
///
/// The remaining eigenvalues are the conjugates of the coupled ones.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralPair<T> {
    pub kind: Side,
    pub parity: Parity,
    pub n: usize,
    pub alphas: Vec<T>,
    pub betas: Vec<T>,
}

impl<T: Scalar> SpectralPair<T> {
    /// Expands to the full cross-shaped core `Ω` or `Σ`.
    pub fn to_xpattern(&self) -> XPattern<T> {
        let n = self.n;
        let mut diag = vec![T::zero(); n];
        let mut anti = vec![T::zero(); n];
        match self.kind {
            Side::Circulant => {
                for (k, &a) in self.alphas.iter().enumerate() {
                    diag[k] = a;
                    diag[(n - k) % n] = a;
                }
                for (i, &b) in self.betas.iter().enumerate() {
                    let k = i + 1;
                    anti[k] = b;
                    anti[n - k] = -b;
                }
            }
            Side::Skew => {
                for (k, &a) in self.alphas.iter().enumerate() {
                    diag[k] = a;
                    diag[n - 1 - k] = a;
                }
                for (k, &b) in self.betas.iter().enumerate() {
                    anti[k] = b;
                    anti[n - 1 - k] = -b;
                }
            }
        }
        XPattern::from_parts_unchecked(self.kind, diag, anti)
    }

    /// All `n` eigenvalues, conjugate pairs included.
    pub fn eigenvalues(&self) -> Vec<Complex<T>> {
        let zero = T::zero();
        let mut out = Vec::with_capacity(self.n);
        let paired = self.betas.len();
        let offset = usize::from(self.kind == Side::Circulant);
        for (k, &a) in self.alphas.iter().enumerate() {
            let b = k
                .checked_sub(offset)
                .filter(|&i| i < paired)
                .map(|i| self.betas[i]);
            match b {
                Some(b) => {
                    out.push(Complex::new(a, b));
                    out.push(Complex::new(a, -b));
                }
                None => out.push(Complex::new(a, zero)),
            }
        }
        out
    }

    /// Smallest real part over the spectrum.
    pub fn min_alpha(&self) -> T {
        self.alphas
            .iter()
            .copied()
            .fold(T::infinity(), |acc, a| acc.min(a))
    }
}

/// Recovers `Ω` (circulant) or `Σ` (skew) from the first column with one
/// butterfly and one block transform: `Uᵀ c = Ω Uᵀ e₀` and `Ũᵀ s = Σ Ũᵀ e₀`,
/// where `Uᵀ e₀` has entries `1/√n` at fixed points, `√2/√n` on the leading
/// member of each pair and zeros on the trailing members.
pub fn real_spectrum<T: Scalar>(kind: Side, col: &[T]) -> Result<SpectralPair<T>> {
    if col.is_empty() {
        return Err(Error::InvalidDimension("empty first column".into()));
    }
    let plan = BlockTransform::new(kind, col.len())?;
    real_spectrum_with(&plan, col)
}

/// [`real_spectrum`] reusing an existing block transform plan.
pub fn real_spectrum_with<T: Scalar>(
    plan: &BlockTransform<T>,
    col: &[T],
) -> Result<SpectralPair<T>> {
    let n = plan.n();
    check_len(n, col.len())?;
    let kind = plan.side();
    let m = n / 2;
    let parity = Parity::of(n);
    let nf = T::from_usize_lossy(n);
    let full = nf.sqrt();
    let half = (nf * T::half()).sqrt();
    let (alphas, betas) = match kind {
        Side::Circulant => {
            let v = plan.apply(&apply_q(col, false)?, true)?;
            let pairs = (n - 1) / 2;
            let mut alphas = Vec::with_capacity(m + 1);
            alphas.push(full * v[0]);
            alphas.extend((1..=pairs).map(|k| half * v[k]));
            if parity == Parity::Even && n > 1 {
                alphas.push(full * v[m]);
            }
            let betas = (1..=pairs).map(|k| -half * v[n - k]).collect();
            (alphas, betas)
        }
        Side::Skew => {
            let u = plan.apply(&apply_q(col, true)?, true)?;
            let mut alphas: Vec<T> = (0..m).map(|k| half * u[k]).collect();
            if parity == Parity::Odd {
                alphas.push(full * u[m]);
            }
            let betas = (0..m).map(|k| -half * u[n - 1 - k]).collect();
            (alphas, betas)
        }
    };
    Ok(SpectralPair {
        kind,
        parity,
        n,
        alphas,
        betas,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::max_abs_diff;

    #[test]
    fn symmetric_circulant_example() {
        let sp = real_spectrum::<f64>(Side::Circulant, &[2.0, 1.0, 0.0, 1.0]).unwrap();
        assert!(max_abs_diff(&sp.alphas, &[4.0, 2.0, 0.0]) < 1e-14);
        assert_eq!(sp.betas.len(), 1);
        assert!(sp.betas[0].abs() < 1e-14);
        let x = sp.to_xpattern();
        assert!(x.anti().iter().all(|b| b.abs() < 1e-14));
    }

    #[test]
    fn scalar_matrices() {
        for n in 1..12 {
            let mut col = vec![0.0f64; n];
            col[0] = 2.5;
            for side in [Side::Circulant, Side::Skew] {
                let sp = real_spectrum(side, &col).unwrap();
                assert!(
                    sp.alphas.iter().all(|a| (a - 2.5).abs() < 1e-14),
                    "{side:?} {n}"
                );
                assert!(sp.betas.iter().all(|b| b.abs() < 1e-14));
            }
        }
    }

    #[test]
    fn lengths_follow_the_ordering() {
        let cases = [
            (Side::Circulant, 8, 5, 3),
            (Side::Circulant, 9, 5, 4),
            (Side::Skew, 8, 4, 4),
            (Side::Skew, 9, 5, 4),
            (Side::Circulant, 1, 1, 0),
            (Side::Skew, 1, 1, 0),
            (Side::Circulant, 2, 2, 0),
            (Side::Skew, 2, 1, 1),
        ];
        for (side, n, na, nb) in cases {
            let sp = real_spectrum(side, &vec![1.0; n]).unwrap();
            assert_eq!((sp.alphas.len(), sp.betas.len()), (na, nb), "{side:?} {n}");
            assert_eq!(sp.eigenvalues().len(), n);
        }
    }

    #[test]
    fn circulant_matches_dft_of_column() {
        // λ_k = Σ_d c_d e^{-2πidk/n}
        let col = [0.3, -1.2, 2.0, 0.7, 0.1, -0.4, 1.1];
        let n = col.len();
        let sp = real_spectrum(Side::Circulant, &col).unwrap();
        for k in 0..=n / 2 {
            let lam: Complex<f64> = col
                .iter()
                .enumerate()
                .map(|(d, &c)| {
                    let a = -2.0 * std::f64::consts::PI * (d * k) as f64 / n as f64;
                    Complex::new(a.cos(), a.sin()) * c
                })
                .sum();
            assert!((sp.alphas[k] - lam.re).abs() < 1e-13);
            if k >= 1 {
                assert!((sp.betas[k - 1] - lam.im).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn empty_column_rejected() {
        assert!(real_spectrum::<f64>(Side::Skew, &[]).is_err());
    }
}
