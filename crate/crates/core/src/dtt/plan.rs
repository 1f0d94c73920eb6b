//! Reusable transform plans with a definitional and a fast backend.

use num_complex::Complex;

use super::{check_size, counter, dtt_matrix, DttKind, Flavor, Layout};
use crate::dense::DenseMatrix;
use crate::error::{check_len, Result};
use crate::fft::FftPlan;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Backend {
    /// `O(s²)` product with the explicitly formed matrix.
    Definitional,
    /// `O(s log s)` evaluation through a complex DFT.
    #[default]
    Fast,
}

/// A transform of fixed kind and size, ready to be applied repeatedly.
#[derive(Debug, Clone)]
pub struct DttPlan<T> {
    kind: DttKind,
    size: usize,
    backend: Backend,
    engine: Engine<T>,
}

#[derive(Debug, Clone)]
enum Engine<T> {
    Identity,
    Dense(DenseMatrix<T>),
    Fast(Box<FastEngine<T>>),
}

/// Twiddle tables for one orientation (plain or transposed).
#[derive(Debug, Clone)]
struct Orientation<T> {
    // input weight times exp(-2πi a k / P)
    pre: Vec<Complex<T>>,
    // scale · output weight · exp(-2πi b (j + a) / P)
    post: Vec<Complex<T>>,
}

#[derive(Debug, Clone)]
struct FastEngine<T> {
    fft: FftPlan<T>,
    forward: Orientation<T>,
    transposed: Orientation<T>,
}

fn unit<T: Scalar>(num: u128, den: u128) -> Complex<T> {
    let angle = -T::TAU() * T::lit((num % den) as f64) / T::lit(den as f64);
    Complex::new(angle.cos(), angle.sin())
}

impl<T: Scalar> Orientation<T> {
    fn new(
        size: usize,
        period: usize,
        row_shift2: usize,
        col_shift2: usize,
        row_weight: &[T],
        col_weight: &[T],
        scale: T,
    ) -> Self {
        let p = period as u128;
        let pre = (0..size)
            .map(|k| unit::<T>(row_shift2 as u128 * k as u128, 2 * p) * col_weight[k])
            .collect();
        let post = (0..size)
            .map(|j| {
                let num = col_shift2 as u128 * (2 * j + row_shift2) as u128;
                unit::<T>(num, 4 * p) * (scale * row_weight[j])
            })
            .collect();
        Self { pre, post }
    }
}

impl<T: Scalar> FastEngine<T> {
    fn new(layout: &Layout, size: usize) -> Self {
        let scale: T = layout.scale();
        let rw: Vec<T> = layout.row_weight.vector(size);
        let cw: Vec<T> = layout.col_weight.vector(size);
        let forward = Orientation::new(
            size,
            layout.period,
            layout.row_shift2,
            layout.col_shift2,
            &rw,
            &cw,
            scale,
        );
        // Mᵀ swaps the roles of the two shifts and of the two weights.
        let transposed = Orientation::new(
            size,
            layout.period,
            layout.col_shift2,
            layout.row_shift2,
            &cw,
            &rw,
            scale,
        );
        Self {
            fft: FftPlan::new(layout.period),
            forward,
            transposed,
        }
    }

    fn apply(&self, flavor: Flavor, x: &[T], transposed: bool) -> Vec<T> {
        let o = if transposed {
            &self.transposed
        } else {
            &self.forward
        };
        let mut buf = vec![Complex::new(T::zero(), T::zero()); self.fft.len()];
        for ((b, &xk), &w) in buf.iter_mut().zip(x).zip(&o.pre) {
            *b = w * xk;
        }
        self.fft.forward(&mut buf);
        buf.iter()
            .zip(&o.post)
            .map(|(&z, &w)| {
                let e = z * w;
                match flavor {
                    Flavor::Cosine => e.re,
                    Flavor::Sine => -e.im,
                }
            })
            .collect()
    }
}

impl<T: Scalar> DttPlan<T> {
    pub fn new(kind: DttKind, size: usize, backend: Backend) -> Result<Self> {
        check_size(size)?;
        let engine = match Layout::of(kind, size) {
            None => Engine::Identity,
            Some(layout) => match backend {
                Backend::Definitional => Engine::Dense(dtt_matrix(kind, size)?),
                Backend::Fast => Engine::Fast(Box::new(FastEngine::new(&layout, size))),
            },
        };
        Ok(Self {
            kind,
            size,
            backend,
            engine,
        })
    }

    pub fn kind(&self) -> DttKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    /// Returns `M x`, or `Mᵀ x` when `transposed` is set.
    pub fn apply(&self, x: &[T], transposed: bool) -> Result<Vec<T>> {
        check_len(self.size, x.len())?;
        counter::record(self.kind.flavor, self.size);
        Ok(match &self.engine {
            Engine::Identity => x.to_vec(),
            Engine::Dense(m) => {
                if transposed {
                    (0..self.size)
                        .map(|j| (0..self.size).map(|k| m[(k, j)] * x[k]).sum())
                        .collect()
                } else {
                    m.matvec(x)?
                }
            }
            Engine::Fast(f) => f.apply(self.kind.flavor, x, transposed),
        })
    }
}

/// Free-function form of [`DttPlan::apply`].
pub fn dtt_apply<T: Scalar>(plan: &DttPlan<T>, x: &[T], transposed: bool) -> Result<Vec<T>> {
    plan.apply(x, transposed)
}
