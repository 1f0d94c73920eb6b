//! Real-arithmetic `O(n log n)` products with circulant, skew-circulant and
//! Toeplitz matrices.
//!
//! Circulant: `Cx = Qᵀ B Ω Bᵀ Q x`. Skew-circulant: `Sx = Q B̃ Σ B̃ᵀ Qᵀ x`.
//! Toeplitz: `Tx = Cx + Sx` with `C`, `S` from the splitting.

use crate::error::{check_len, Result};
use crate::scalar::Scalar;
use crate::schur::{
    apply_q, real_spectrum_with, BlockTransform, ShiftSign, Side, SpectralPair, XPattern,
};
use crate::structured::{cscs_split, CirculantCol, SkewCirculantCol, ToeplitzBands};

/// A circulant or skew-circulant matrix with its real Schur core precomputed.
#[derive(Debug, Clone)]
pub struct CirculantOperator<T> {
    kind: Side,
    block: BlockTransform<T>,
    spectrum: SpectralPair<T>,
    core: XPattern<T>,
}

impl<T: Scalar> CirculantOperator<T> {
    pub fn circulant(c: &CirculantCol<T>) -> Result<Self> {
        Self::from_column(Side::Circulant, c.col())
    }

    pub fn skew(s: &SkewCirculantCol<T>) -> Result<Self> {
        Self::from_column(Side::Skew, s.col())
    }

    pub fn from_column(kind: Side, col: &[T]) -> Result<Self> {
        let block = BlockTransform::new(kind, col.len())?;
        let spectrum = real_spectrum_with(&block, col)?;
        let core = spectrum.to_xpattern();
        Ok(Self {
            kind,
            block,
            spectrum,
            core,
        })
    }

    pub fn kind(&self) -> Side {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.block.n()
    }

    pub fn spectrum(&self) -> &SpectralPair<T> {
        &self.spectrum
    }

    pub fn core(&self) -> &XPattern<T> {
        &self.core
    }

    pub fn block(&self) -> &BlockTransform<T> {
        &self.block
    }

    /// `Wᵀ x` where `W` is `U` (circulant) or `Ũ` (skew).
    pub fn to_spectral(&self, x: &[T]) -> Result<Vec<T>> {
        let qx = match self.kind {
            Side::Circulant => apply_q(x, false)?,
            Side::Skew => apply_q(x, true)?,
        };
        self.block.apply(&qx, true)
    }

    /// `W y`, the inverse of [`Self::to_spectral`].
    pub fn from_spectral(&self, y: &[T]) -> Result<Vec<T>> {
        let by = self.block.apply(y, false)?;
        match self.kind {
            Side::Circulant => apply_q(&by, true),
            Side::Skew => apply_q(&by, false),
        }
    }

    /// `M x` through the real Schur factorization.
    pub fn apply(&self, x: &[T]) -> Result<Vec<T>> {
        check_len(self.n(), x.len())?;
        let y = self.to_spectral(x)?;
        let y = self.core.apply(T::zero(), ShiftSign::None, &y)?;
        self.from_spectral(&y)
    }
}

/// `Cx` for a circulant operator.
pub fn circulant_matvec<T: Scalar>(op: &CirculantOperator<T>, x: &[T]) -> Result<Vec<T>> {
    debug_assert_eq!(op.kind(), Side::Circulant);
    op.apply(x)
}

/// `Sx` for a skew-circulant operator.
pub fn skew_circulant_matvec<T: Scalar>(op: &CirculantOperator<T>, x: &[T]) -> Result<Vec<T>> {
    debug_assert_eq!(op.kind(), Side::Skew);
    op.apply(x)
}

/// Toeplitz matrix held as its circulant and skew-circulant parts.
#[derive(Debug, Clone)]
pub struct ToeplitzOperator<T> {
    pub circulant: CirculantOperator<T>,
    pub skew: CirculantOperator<T>,
}

impl<T: Scalar> ToeplitzOperator<T> {
    pub fn new(t: &ToeplitzBands<T>) -> Result<Self> {
        let (c, s) = cscs_split(t);
        Ok(Self {
            circulant: CirculantOperator::circulant(&c)?,
            skew: CirculantOperator::skew(&s)?,
        })
    }

    pub fn n(&self) -> usize {
        self.circulant.n()
    }

    pub fn apply(&self, x: &[T]) -> Result<Vec<T>> {
        let mut y = self.circulant.apply(x)?;
        for (a, b) in y.iter_mut().zip(self.skew.apply(x)?) {
            *a += b;
        }
        Ok(y)
    }
}

pub fn toeplitz_matvec<T: Scalar>(op: &ToeplitzOperator<T>, x: &[T]) -> Result<Vec<T>> {
    op.apply(x)
}
