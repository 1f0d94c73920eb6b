use super::Side;
use crate::dtt::{Backend, DttKind, DttPlan};
use crate::error::{check_len, Error, Result};
use crate::scalar::Scalar;

/// The block-diagonal factor `B = QU` (circulant side) or `B̃ = QᵀŨ` (skew
/// side), held as one cosine plan for the leading block and one sine plan
/// for the trailing block.
///
/// | side      | n = 2m                 | n = 2m + 1              |
/// |-----------|------------------------|-------------------------|
/// | circulant | DCT-I(m+1), −R DST-I(m−1) R | DCT-V(m+1), −R DST-V(m) R |
/// | skew      | DCT-II(m), R DST-II(m) R    | DCT-VI(m+1), R DST-VI(m) R |
///
/// `R` reverses the trailing block.
#[derive(Debug, Clone)]
pub struct BlockTransform<T> {
    side: Side,
    n: usize,
    head: DttPlan<T>,
    tail: Option<DttPlan<T>>,
    negate_tail: bool,
}

impl<T: Scalar> BlockTransform<T> {
    pub fn new(side: Side, n: usize) -> Result<Self> {
        Self::with_backend(side, n, Backend::Fast)
    }

    pub fn with_backend(side: Side, n: usize, backend: Backend) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension("block transform of order 0".into()));
        }
        let m = n / 2;
        let even = n.is_multiple_of(2);
        let (cos_kind, head_len, sin_kind) = match (side, even) {
            (Side::Circulant, true) => (DttKind::DCT1, m + 1, DttKind::DST1),
            (Side::Circulant, false) => (DttKind::DCT5, m + 1, DttKind::DST5),
            (Side::Skew, true) => (DttKind::DCT2, m, DttKind::DST2),
            (Side::Skew, false) => (DttKind::DCT6, m + 1, DttKind::DST6),
        };
        let tail_len = n - head_len;
        let tail = if tail_len > 0 {
            Some(DttPlan::new(sin_kind, tail_len, backend)?)
        } else {
            None
        };
        Ok(Self {
            side,
            n,
            head: DttPlan::new(cos_kind, head_len, backend)?,
            tail,
            negate_tail: side == Side::Circulant,
        })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn head_len(&self) -> usize {
        self.head.size()
    }

    /// `B x`, or `Bᵀ x` when `transposed` is set.
    pub fn apply(&self, x: &[T], transposed: bool) -> Result<Vec<T>> {
        check_len(self.n, x.len())?;
        let (head, tail) = x.split_at(self.head.size());
        let mut out = self.head.apply(head, transposed)?;
        if let Some(plan) = &self.tail {
            let reversed: Vec<T> = tail.iter().rev().copied().collect();
            let y = plan.apply(&reversed, transposed)?;
            if self.negate_tail {
                out.extend(y.into_iter().rev().map(|v| -v));
            } else {
                out.extend(y.into_iter().rev());
            }
        }
        Ok(out)
    }
}

/// One-shot form of [`BlockTransform::apply`].
pub fn apply_block_transform<T: Scalar>(side: Side, x: &[T], transposed: bool) -> Result<Vec<T>> {
    BlockTransform::new(side, x.len())?.apply(x, transposed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dtt::dtt_matrix;
    use crate::scalar::max_abs_diff;

    #[test]
    fn order_two_circulant_is_a_single_dct1() {
        let y = apply_block_transform(Side::Circulant, &[1.0, 0.0], false).unwrap();
        let c = dtt_matrix::<f64>(DttKind::DCT1, 2).unwrap();
        assert!(max_abs_diff(&y, &c.column(0)) < 1e-15);
    }

    #[test]
    fn round_trip() {
        for side in [Side::Circulant, Side::Skew] {
            for n in 1..40 {
                let b = BlockTransform::<f64>::new(side, n).unwrap();
                let x: Vec<f64> = (0..n).map(|i| ((i * i) as f64 * 0.1).sin()).collect();
                let back = b.apply(&b.apply(&x, false).unwrap(), true).unwrap();
                assert!(max_abs_diff(&back, &x) < 1e-12, "{side:?} n = {n}");
            }
        }
    }

    #[test]
    fn rejects_wrong_length() {
        let b = BlockTransform::<f64>::new(Side::Skew, 6).unwrap();
        assert!(b.apply(&[0.0; 5], false).is_err());
        assert!(BlockTransform::<f64>::new(Side::Skew, 0).is_err());
    }
}
