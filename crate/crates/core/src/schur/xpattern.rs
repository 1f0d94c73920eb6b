use super::Side;
use crate::dense::DenseMatrix;
use crate::error::{check_len, Error, Result};
use crate::scalar::Scalar;

/// How the shift enters [`XPattern::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftSign {
    /// `(θI + X) y`
    Plus,
    /// `(θI − X) y`
    Minus,
    /// `X y`; the shift is ignored.
    None,
}

/// Cross-shaped real Schur core: `M[j][j] = diag[j]` and
/// `M[j][partner(j)] = anti[j]`, zero elsewhere.
///
/// Invariants: `diag[partner(j)] = diag[j]`, `anti[partner(j)] = −anti[j]`,
/// and `anti[j] = 0` at fixed points of `partner`.
#[derive(Debug, Clone, PartialEq)]
pub struct XPattern<T> {
    pairing: Side,
    diag: Vec<T>,
    anti: Vec<T>,
}

impl<T: Scalar> XPattern<T> {
    pub fn new(pairing: Side, diag: Vec<T>, anti: Vec<T>) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::InvalidDimension("empty cross pattern".into()));
        }
        check_len(n, anti.len())?;
        for j in 0..n {
            let p = pairing.partner(j, n);
            let ok = if p == j {
                anti[j] == T::zero()
            } else {
                diag[p] == diag[j] && anti[p] == -anti[j]
            };
            if !ok {
                return Err(Error::InvalidConfig(format!(
                    "cross pattern violates pairing symmetry at index {j}"
                )));
            }
        }
        Ok(Self {
            pairing,
            diag,
            anti,
        })
    }

    /// Zero pattern of order `n`.
    pub fn zeros(pairing: Side, n: usize) -> Result<Self> {
        Self::new(pairing, vec![T::zero(); n], vec![T::zero(); n])
    }

    pub(crate) fn from_parts_unchecked(pairing: Side, diag: Vec<T>, anti: Vec<T>) -> Self {
        Self {
            pairing,
            diag,
            anti,
        }
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn pairing(&self) -> Side {
        self.pairing
    }

    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    pub fn anti(&self) -> &[T] {
        &self.anti
    }

    pub fn partner(&self, j: usize) -> usize {
        self.pairing.partner(j, self.n())
    }

    pub fn to_dense(&self) -> DenseMatrix<T> {
        let n = self.n();
        let mut m = DenseMatrix::zeros(n, n);
        for j in 0..n {
            m[(j, j)] = self.diag[j];
            let p = self.partner(j);
            if p != j {
                m[(j, p)] = self.anti[j];
            }
        }
        m
    }

    /// `(θI ± X) y` or `X y` in `O(n)`.
    pub fn apply(&self, shift: T, sign: ShiftSign, y: &[T]) -> Result<Vec<T>> {
        let n = self.n();
        check_len(n, y.len())?;
        Ok((0..n)
            .map(|j| {
                let p = self.partner(j);
                let coupled = if p == j {
                    T::zero()
                } else {
                    self.anti[j] * y[p]
                };
                let own = self.diag[j] * y[j];
                match sign {
                    ShiftSign::Plus => shift * y[j] + own + coupled,
                    ShiftSign::Minus => shift * y[j] - own - coupled,
                    ShiftSign::None => own + coupled,
                }
            })
            .collect())
    }

    /// Solves `(θI + X) y = z` with one division per fixed point and one 2×2
    /// solve per coupled pair.
    pub fn shifted_solve(&self, shift: T, z: &[T]) -> Result<Vec<T>> {
        let n = self.n();
        check_len(n, z.len())?;
        let tiny = T::epsilon() * T::lit(16.0);
        let mut y = vec![T::zero(); n];
        for j in 0..n {
            let p = self.partner(j);
            if p < j {
                continue;
            }
            let dj = shift + self.diag[j];
            if p == j {
                if dj.abs() <= tiny * (shift.abs() + self.diag[j].abs()) || dj == T::zero() {
                    return Err(Error::SingularShift {
                        index: j,
                        pivot: dj.to_f64_lossy(),
                    });
                }
                y[j] = z[j] / dj;
                continue;
            }
            let dp = shift + self.diag[p];
            let (bj, bp) = (self.anti[j], self.anti[p]);
            let det = dj * dp - bj * bp;
            let scale = (dj * dp).abs() + (bj * bp).abs();
            if det.abs() <= tiny * scale || det == T::zero() {
                return Err(Error::SingularShift {
                    index: j,
                    pivot: det.to_f64_lossy(),
                });
            }
            y[j] = (dp * z[j] - bj * z[p]) / det;
            y[p] = (dj * z[p] - bp * z[j]) / det;
        }
        Ok(y)
    }
}
