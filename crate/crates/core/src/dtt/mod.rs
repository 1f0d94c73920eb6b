//! Orthogonal discrete cosine and sine transforms, families I, II, V and VI.
//!
//! Every kind is described by one entry formula
//!
//! ```text
//! M[j][k] = scale · w_row(j) · w_col(k) · trig(2π (j + a)(k + b) / P)
//! ```
//!
//! with `trig` either cosine or sine, a period `P`, and index shifts
//! `a, b ∈ {0, ½, 1}`. The definitional backend evaluates that formula
//! directly; the fast backend evaluates the same sum through one complex DFT
//! of length `P` (see [`plan`]).
//!
//! All matrices are scaled to be orthogonal, so the transpose is the inverse.

mod counter;
mod plan;

pub use counter::{reset_transform_tally, transform_tally, FlavorTally, TransformTally};
pub use plan::{dtt_apply, Backend, DttPlan};

use std::fmt;

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    I,
    II,
    V,
    VI,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Cosine,
    Sine,
}

/// One of the eight transform definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DttKind {
    pub family: Family,
    pub flavor: Flavor,
}

impl DttKind {
    pub const DCT1: Self = Self::new(Family::I, Flavor::Cosine);
    pub const DCT2: Self = Self::new(Family::II, Flavor::Cosine);
    pub const DCT5: Self = Self::new(Family::V, Flavor::Cosine);
    pub const DCT6: Self = Self::new(Family::VI, Flavor::Cosine);
    pub const DST1: Self = Self::new(Family::I, Flavor::Sine);
    pub const DST2: Self = Self::new(Family::II, Flavor::Sine);
    pub const DST5: Self = Self::new(Family::V, Flavor::Sine);
    pub const DST6: Self = Self::new(Family::VI, Flavor::Sine);

    pub const ALL: [Self; 8] = [
        Self::DCT1,
        Self::DCT2,
        Self::DCT5,
        Self::DCT6,
        Self::DST1,
        Self::DST2,
        Self::DST5,
        Self::DST6,
    ];

    pub const fn new(family: Family, flavor: Flavor) -> Self {
        Self { family, flavor }
    }

    pub fn is_cosine(self) -> bool {
        self.flavor == Flavor::Cosine
    }
}

impl fmt::Display for DttKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flavor = match self.flavor {
            Flavor::Cosine => "DCT",
            Flavor::Sine => "DST",
        };
        let family = match self.family {
            Family::I => "I",
            Family::II => "II",
            Family::V => "V",
            Family::VI => "VI",
        };
        write!(f, "{flavor}-{family}")
    }
}

/// Which entries of a row or column index carry the `1/√2` weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Weight {
    None,
    First,
    Last,
    FirstAndLast,
}

impl Weight {
    fn at<T: Scalar>(self, idx: usize, size: usize) -> T {
        let halved = match self {
            Weight::None => false,
            Weight::First => idx == 0,
            Weight::Last => idx + 1 == size,
            Weight::FirstAndLast => idx == 0 || idx + 1 == size,
        };
        if halved {
            T::FRAC_1_SQRT_2()
        } else {
            T::one()
        }
    }

    pub(crate) fn vector<T: Scalar>(self, size: usize) -> Vec<T> {
        (0..size).map(|i| self.at(i, size)).collect()
    }
}

/// Entry-formula parameters for one `(kind, size)` pair.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Layout {
    pub period: usize,
    /// Row shift `a`, in halves.
    pub row_shift2: usize,
    /// Column shift `b`, in halves.
    pub col_shift2: usize,
    pub row_weight: Weight,
    pub col_weight: Weight,
    /// Squared leading factor, kept as `numerator / denominator`.
    pub scale_sq: (usize, usize),
}

impl Layout {
    /// `None` for the degenerate one-point DCT-I, which is the identity.
    pub(crate) fn of(kind: DttKind, size: usize) -> Option<Self> {
        debug_assert!(size >= 1);
        let s = size;
        let l = match (kind.family, kind.flavor) {
            (Family::I, Flavor::Cosine) => {
                if s == 1 {
                    return None;
                }
                let n = s - 1;
                Layout {
                    period: 2 * n,
                    row_shift2: 0,
                    col_shift2: 0,
                    row_weight: Weight::FirstAndLast,
                    col_weight: Weight::FirstAndLast,
                    scale_sq: (2, n),
                }
            }
            (Family::II, Flavor::Cosine) => Layout {
                period: 2 * s,
                row_shift2: 0,
                col_shift2: 1,
                row_weight: Weight::First,
                col_weight: Weight::None,
                scale_sq: (2, s),
            },
            (Family::V, Flavor::Cosine) => Layout {
                period: 2 * s - 1,
                row_shift2: 0,
                col_shift2: 0,
                row_weight: Weight::First,
                col_weight: Weight::First,
                scale_sq: (4, 2 * s - 1),
            },
            (Family::VI, Flavor::Cosine) => Layout {
                period: 2 * s - 1,
                row_shift2: 0,
                col_shift2: 1,
                row_weight: Weight::First,
                col_weight: Weight::Last,
                scale_sq: (4, 2 * s - 1),
            },
            (Family::I, Flavor::Sine) => Layout {
                period: 2 * (s + 1),
                row_shift2: 2,
                col_shift2: 2,
                row_weight: Weight::None,
                col_weight: Weight::None,
                scale_sq: (2, s + 1),
            },
            (Family::II, Flavor::Sine) => Layout {
                period: 2 * s,
                row_shift2: 2,
                col_shift2: 1,
                row_weight: Weight::Last,
                col_weight: Weight::None,
                scale_sq: (2, s),
            },
            (Family::V, Flavor::Sine) => Layout {
                period: 2 * s + 1,
                row_shift2: 2,
                col_shift2: 2,
                row_weight: Weight::None,
                col_weight: Weight::None,
                scale_sq: (4, 2 * s + 1),
            },
            (Family::VI, Flavor::Sine) => Layout {
                period: 2 * s + 1,
                row_shift2: 2,
                col_shift2: 1,
                row_weight: Weight::None,
                col_weight: Weight::None,
                scale_sq: (4, 2 * s + 1),
            },
        };
        Some(l)
    }

    pub(crate) fn scale<T: Scalar>(&self) -> T {
        (T::from_usize_lossy(self.scale_sq.0) / T::from_usize_lossy(self.scale_sq.1)).sqrt()
    }

    /// Angle `2π (j + a)(k + b) / P` reduced exactly in integer arithmetic.
    pub(crate) fn angle<T: Scalar>(&self, j: usize, k: usize) -> T {
        let den = 4 * self.period as u128;
        let num = ((2 * j + self.row_shift2) as u128 * (2 * k + self.col_shift2) as u128) % den;
        T::TAU() * T::lit(num as f64) / T::lit(den as f64)
    }
}

pub(crate) fn check_size(size: usize) -> Result<()> {
    if size == 0 {
        Err(Error::InvalidDimension(
            "transform size must be at least 1".into(),
        ))
    } else {
        Ok(())
    }
}

/// Dense `size × size` matrix of the given transform.
pub fn dtt_matrix<T: Scalar>(kind: DttKind, size: usize) -> Result<DenseMatrix<T>> {
    check_size(size)?;
    let Some(layout) = Layout::of(kind, size) else {
        return Ok(DenseMatrix::identity(size));
    };
    let scale: T = layout.scale();
    let rw: Vec<T> = layout.row_weight.vector(size);
    let cw: Vec<T> = layout.col_weight.vector(size);
    Ok(DenseMatrix::from_fn(size, size, |j, k| {
        let angle: T = layout.angle(j, k);
        let trig = match kind.flavor {
            Flavor::Cosine => angle.cos(),
            Flavor::Sine => angle.sin(),
        };
        scale * rw[j] * cw[k] * trig
    }))
}
