//! Compact Toeplitz, circulant and skew-circulant matrices and the
//! circulant/skew-circulant splitting `T = C + S`.

use crate::dense::DenseMatrix;
use crate::error::{check_len, Error, Result};
use crate::scalar::Scalar;

/// A Toeplitz matrix `T[j][k] = t_{j−k}` stored as its `2n − 1` diagonal
/// coefficients `t_{−(n−1)}, …, t_{n−1}` in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzBands<T> {
    n: usize,
    coeffs: Vec<T>,
}

/// Circulant matrix `C[j][k] = c_{(j−k) mod n}`, stored as its first column.
#[derive(Debug, Clone, PartialEq)]
pub struct CirculantCol<T> {
    col: Vec<T>,
}

/// Skew-circulant matrix, stored as its first column. Entries above the
/// diagonal wrap around with a sign flip: `S[j][k] = −s_{j−k+n}` for `j < k`.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewCirculantCol<T> {
    col: Vec<T>,
}

/// Operations shared by the compact structured types.
pub trait Structured<T: Scalar> {
    fn dim(&self) -> usize;

    /// Entry `(j, k)` of the represented matrix.
    fn entry(&self, j: usize, k: usize) -> T;

    fn to_dense(&self) -> DenseMatrix<T> {
        let n = self.dim();
        DenseMatrix::from_fn(n, n, |j, k| self.entry(j, k))
    }

    /// Straightforward `O(n²)` product, used as the reference for fast paths.
    fn naive_matvec(&self, x: &[T]) -> Result<Vec<T>> {
        let n = self.dim();
        check_len(n, x.len())?;
        Ok((0..n)
            .map(|j| (0..n).map(|k| self.entry(j, k) * x[k]).sum())
            .collect())
    }
}

impl<T: Scalar> ToeplitzBands<T> {
    pub fn from_bands(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len().is_multiple_of(2) {
            return Err(Error::InvalidDimension(format!(
                "Toeplitz band vector must have odd length 2n-1, got {}",
                coeffs.len()
            )));
        }
        Ok(Self {
            n: coeffs.len().div_ceil(2),
            coeffs,
        })
    }

    /// Builds the bands from a coefficient function `k ↦ t_k`.
    pub fn from_fn(n: usize, mut t: impl FnMut(isize) -> T) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(
                "Toeplitz order must be positive".into(),
            ));
        }
        let m = n as isize - 1;
        Self::from_bands((-m..=m).map(&mut t).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// `t_k` for `|k| < n`.
    pub fn t(&self, k: isize) -> T {
        self.coeffs[(k + self.n as isize - 1) as usize]
    }

    pub fn first_column(&self) -> &[T] {
        &self.coeffs[self.n - 1..]
    }

    /// First row `t_0, t_{−1}, …, t_{−(n−1)}`.
    pub fn first_row(&self) -> Vec<T> {
        self.coeffs[..self.n].iter().rev().copied().collect()
    }

    /// Bands of `Tᵀ`.
    pub fn transpose(&self) -> Self {
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().rev().copied().collect(),
        }
    }
}

impl<T: Scalar> Structured<T> for ToeplitzBands<T> {
    fn dim(&self) -> usize {
        self.n
    }

    fn entry(&self, j: usize, k: usize) -> T {
        self.t(j as isize - k as isize)
    }
}

impl<T: Scalar> CirculantCol<T> {
    pub fn new(col: Vec<T>) -> Result<Self> {
        if col.is_empty() {
            return Err(Error::InvalidDimension("empty circulant column".into()));
        }
        Ok(Self { col })
    }

    pub fn col(&self) -> &[T] {
        &self.col
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut col = vec![T::zero(); n];
        if let Some(c) = col.first_mut() {
            *c = T::one();
        }
        Self::new(col)
    }
}

impl<T: Scalar> Structured<T> for CirculantCol<T> {
    fn dim(&self) -> usize {
        self.col.len()
    }

    fn entry(&self, j: usize, k: usize) -> T {
        let n = self.col.len();
        self.col[(j + n - k) % n]
    }
}

impl<T: Scalar> SkewCirculantCol<T> {
    pub fn new(col: Vec<T>) -> Result<Self> {
        if col.is_empty() {
            return Err(Error::InvalidDimension(
                "empty skew-circulant column".into(),
            ));
        }
        Ok(Self { col })
    }

    pub fn col(&self) -> &[T] {
        &self.col
    }
}

impl<T: Scalar> Structured<T> for SkewCirculantCol<T> {
    fn dim(&self) -> usize {
        self.col.len()
    }

    fn entry(&self, j: usize, k: usize) -> T {
        if j >= k {
            self.col[j - k]
        } else {
            -self.col[j + self.col.len() - k]
        }
    }
}

/// Splits `T` into its circulant and skew-circulant parts, each carrying half
/// of the main diagonal:
///
/// `c_l = (t_l + t_{l−n}) / 2`, `s_l = (t_l − t_{l−n}) / 2`, `c_0 = s_0 = t_0 / 2`.
pub fn cscs_split<T: Scalar>(t: &ToeplitzBands<T>) -> (CirculantCol<T>, SkewCirculantCol<T>) {
    let n = t.n();
    let half = T::half();
    let mut c = Vec::with_capacity(n);
    let mut s = Vec::with_capacity(n);
    c.push(t.t(0) * half);
    s.push(t.t(0) * half);
    for l in 1..n as isize {
        let (a, b) = (t.t(l), t.t(l - n as isize));
        c.push((a + b) * half);
        s.push((a - b) * half);
    }
    (CirculantCol { col: c }, SkewCirculantCol { col: s })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn dense_rows(m: &DenseMatrix<f64>) -> Vec<Vec<f64>> {
        (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
    }

    #[test]
    fn toeplitz_examples() {
        let t = ToeplitzBands::from_bands(vec![1.0, 2.0, 1.0]).unwrap();
        assert_eq!(
            dense_rows(&t.to_dense()),
            vec![vec![2.0, 1.0], vec![1.0, 2.0]]
        );
        let t = ToeplitzBands::from_bands(vec![0.0, 5.0, 0.0]).unwrap();
        assert_eq!(
            dense_rows(&t.to_dense()),
            vec![vec![5.0, 0.0], vec![0.0, 5.0]]
        );
        let t = ToeplitzBands::from_bands(vec![3.0, 1.0, 2.0, 0.0, 7.0]).unwrap();
        let d = t.to_dense();
        assert_eq!(d.column(0), vec![2.0, 0.0, 7.0]);
        assert_eq!(d.row(0), &[2.0, 1.0, 3.0]);
        assert_eq!(t.first_column(), &[2.0, 0.0, 7.0]);
        assert_eq!(t.first_row(), vec![2.0, 1.0, 3.0]);
    }

    #[test]
    fn even_band_length_rejected() {
        assert!(matches!(
            ToeplitzBands::from_bands(vec![1.0, 2.0]),
            Err(Error::InvalidDimension(_))
        ));
        assert!(ToeplitzBands::<f64>::from_bands(vec![]).is_err());
    }

    #[test]
    fn circulant_and_skew_dense() {
        let c = CirculantCol::new(vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(
            dense_rows(&c.to_dense()),
            vec![
                vec![1.0, 3.0, 2.0],
                vec![2.0, 1.0, 3.0],
                vec![3.0, 2.0, 1.0]
            ]
        );
        let s = SkewCirculantCol::new(vec![1.0, 2.0]).unwrap();
        assert_eq!(
            dense_rows(&s.to_dense()),
            vec![vec![1.0, -2.0], vec![2.0, 1.0]]
        );
        let s = SkewCirculantCol::new(vec![0.0, 1.0, 0.0]).unwrap();
        assert_eq!(
            dense_rows(&s.to_dense()),
            vec![
                vec![0.0, 0.0, -1.0],
                vec![1.0, 0.0, 0.0],
                vec![0.0, 1.0, 0.0]
            ]
        );
    }

    #[test]
    fn naive_products() {
        let id = CirculantCol::<f64>::identity(5).unwrap();
        let x = vec![1.0, -2.0, 3.5, 0.25, 9.0];
        assert_eq!(id.naive_matvec(&x).unwrap(), x);
        let c = CirculantCol::new(vec![2.0, 1.0, 0.0, 1.0]).unwrap();
        assert_eq!(c.naive_matvec(&[1.0; 4]).unwrap(), vec![4.0; 4]);
        let s = SkewCirculantCol::new(vec![0.0, 1.0]).unwrap();
        assert_eq!(s.naive_matvec(&[1.0, 2.0]).unwrap(), vec![-2.0, 1.0]);
        assert!(s.naive_matvec(&[1.0]).is_err());
    }

    #[test]
    fn split_examples() {
        let t = ToeplitzBands::from_bands(vec![1.0, 2.0, 1.0]).unwrap();
        let (c, s) = cscs_split(&t);
        assert_eq!(
            dense_rows(&c.to_dense()),
            vec![vec![1.0, 1.0], vec![1.0, 1.0]]
        );
        assert_eq!(
            dense_rows(&s.to_dense()),
            vec![vec![1.0, 0.0], vec![0.0, 1.0]]
        );

        let t = ToeplitzBands::from_fn(6, |k| if k == 0 { 2.0 } else { 0.0 }).unwrap();
        let (c, s) = cscs_split(&t);
        assert_eq!(c.to_dense(), DenseMatrix::identity(6));
        assert_eq!(s.to_dense(), DenseMatrix::identity(6));
    }

    #[test]
    fn split_reconstructs_exactly() {
        let mut rng = StdRng::seed_from_u64(3);
        for n in 1..=64 {
            let bands: Vec<f64> = (0..2 * n - 1).map(|_| rng.gen_range(-4.0..4.0)).collect();
            let t = ToeplitzBands::from_bands(bands).unwrap();
            let (c, s) = cscs_split(&t);
            assert_eq!(c.to_dense().add(&s.to_dense()), t.to_dense(), "n = {n}");
        }
    }

    #[test]
    fn circulants_are_closed_under_products() {
        let mut rng = StdRng::seed_from_u64(8);
        for n in 1..=16 {
            let a = CirculantCol::new((0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap();
            let b = CirculantCol::new((0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap();
            let p = a.to_dense().matmul(&b.to_dense());
            let first: Vec<f64> = p.column(0);
            let rebuilt = CirculantCol::new(first).unwrap().to_dense();
            assert!(p.max_abs_diff(&rebuilt) < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn naive_matches_dense_product() {
        let mut rng = StdRng::seed_from_u64(4);
        let t =
            ToeplitzBands::from_bands((0..25).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap();
        let x: Vec<f64> = (0..13).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let a = t.naive_matvec(&x).unwrap();
        let b = t.to_dense().matvec(&x).unwrap();
        assert_eq!(a, b);
    }
}
