//! Real Schur forms `C = U Ω Uᵀ` and `S = Ũ Σ Ũᵀ` of real circulant and
//! skew-circulant matrices.
//!
//! `U` and `Ũ` are never formed. The butterfly `Q` reduces them to
//! block-diagonal pairs of one cosine and one (index-reversed) sine
//! transform, `QU = B` and `QᵀŨ = B̃`, so `U = Qᵀ B` and `Ũ = Q B̃`. The cores
//! `Ω` and `Σ` are cross-shaped ([`XPattern`]) and cost `O(n)` to apply or
//! invert after a shift.

mod block;
mod butterfly;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
mod spectrum;
mod xpattern;

pub use block::{apply_block_transform, BlockTransform};
pub use butterfly::apply_q;
pub use spectrum::{real_spectrum, real_spectrum_with, Parity, SpectralPair};
pub use xpattern::{ShiftSign, XPattern};

/// Which of the two structured families an object belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Circulant,
    Skew,
}

impl Side {
    /// Index paired with `j` in the cross-shaped core.
    pub fn partner(self, j: usize, n: usize) -> usize {
        match self {
            Side::Circulant => (n - j) % n,
            Side::Skew => n - 1 - j,
        }
    }
}
