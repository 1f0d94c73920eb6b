//! Dense reference constructions for testing the fast factorizations.
//!
//! Nothing here is used by the production paths; every matrix is built
//! explicitly in `O(n²)` from its defining formulas.

use super::{apply_q, Side};
use crate::dense::DenseMatrix;
use crate::dtt::{dtt_matrix, DttKind};
use crate::error::Result;
use crate::scalar::Scalar;

/// Dense `U` (circulant) or `Ũ` (skew) built from real and imaginary parts of
/// the Fourier eigenvectors.
///
/// Circulant: `f_k[j] = e^{2πijk/n}/√n`; columns are `ĉ₀, √2ĉ₁, …` followed by
/// the `√2ŝ_k` in reverse order, with `ĉ_m` in the middle for even `n`.
/// Skew: `f̃_k[j] = e^{iπj(2k+1)/n}/√n`; columns `√2c̃₀, …, √2c̃_{m−1}`, then
/// `c̃_m` for odd `n`, then `√2s̃_{m−1}, …, √2s̃₀`.
pub fn dense_u_oracle<T: Scalar>(kind: Side, n: usize) -> DenseMatrix<T> {
    let m = n / 2;
    let nf = T::from_usize_lossy(n);
    let inv_sqrt_n = T::one() / nf.sqrt();
    let sqrt2 = T::SQRT_2();
    // angle numerator over denominator 2n, so both families share one formula
    let (num, den): (Box<dyn Fn(usize, usize) -> usize>, usize) = match kind {
        Side::Circulant => (Box::new(|j, k| 2 * j * k), 2 * n),
        Side::Skew => (Box::new(|j, k| j * (2 * k + 1)), 2 * n),
    };
    let re = |j: usize, k: usize| {
        let a = T::TAU() * T::from_usize_lossy(num(j, k) % den) / T::from_usize_lossy(den);
        a.cos() * inv_sqrt_n
    };
    let im = |j: usize, k: usize| {
        let a = T::TAU() * T::from_usize_lossy(num(j, k) % den) / T::from_usize_lossy(den);
        a.sin() * inv_sqrt_n
    };
    // column descriptors: (is_real_part, eigen index, weight)
    let mut cols: Vec<(bool, usize, T)> = Vec::with_capacity(n);
    match kind {
        Side::Circulant => {
            cols.push((true, 0, T::one()));
            let pairs = (n - 1) / 2;
            cols.extend((1..=pairs).map(|k| (true, k, sqrt2)));
            if n.is_multiple_of(2) && n > 1 {
                cols.push((true, m, T::one()));
            }
            cols.extend((1..=pairs).rev().map(|k| (false, k, sqrt2)));
        }
        Side::Skew => {
            cols.extend((0..m).map(|k| (true, k, sqrt2)));
            if n % 2 == 1 {
                cols.push((true, m, T::one()));
            }
            cols.extend((0..m).rev().map(|k| (false, k, sqrt2)));
        }
    }
    DenseMatrix::from_fn(n, n, |j, c| {
        let (real, k, w) = cols[c];
        w * if real { re(j, k) } else { im(j, k) }
    })
}

/// Dense butterfly `Q` (or `Qᵀ`).
pub fn dense_q<T: Scalar>(n: usize, transposed: bool) -> DenseMatrix<T> {
    DenseMatrix::from_columns_of(n, |e| apply_q(e, transposed).expect("n >= 1"))
}

/// The block-diagonal matrix expected for `QU` (circulant) or `QᵀŨ` (skew),
/// assembled from the definitional transform matrices.
pub fn expected_block_matrix<T: Scalar>(kind: Side, n: usize) -> Result<DenseMatrix<T>> {
    let m = n / 2;
    let even = n.is_multiple_of(2);
    let (ck, head, sk, sign) = match (kind, even) {
        (Side::Circulant, true) => (DttKind::DCT1, m + 1, DttKind::DST1, -T::one()),
        (Side::Circulant, false) => (DttKind::DCT5, m + 1, DttKind::DST5, -T::one()),
        (Side::Skew, true) => (DttKind::DCT2, m, DttKind::DST2, T::one()),
        (Side::Skew, false) => (DttKind::DCT6, m + 1, DttKind::DST6, T::one()),
    };
    let tail = n - head;
    let c = dtt_matrix::<T>(ck, head)?;
    let s = if tail > 0 {
        Some(dtt_matrix::<T>(sk, tail)?)
    } else {
        None
    };
    Ok(DenseMatrix::from_fn(n, n, |i, j| {
        if i < head && j < head {
            c[(i, j)]
        } else if i >= head && j >= head {
            let s = s.as_ref().expect("tail block present");
            // reversal on both sides
            sign * s[(n - 1 - i, n - 1 - j)]
        } else {
            T::zero()
        }
    }))
}
