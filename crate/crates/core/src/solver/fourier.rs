//! Complex-DFT form of the CSCS sweep: `C = F Λ F*`, `S = D* F Λ̃ F* D` with
//! `D = diag(e^{iπj/n})`. Six DFTs per sweep.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::fft::FftPlan;
use crate::scalar::Scalar;
use crate::structured::{CirculantCol, SkewCirculantCol};

#[derive(Debug, Clone)]
pub(crate) struct FourierSweep<T> {
    plan: FftPlan<T>,
    /// `θ − λ_k` and `θ + λ_k` for the circulant part.
    c_minus: Vec<Complex<T>>,
    c_plus: Vec<Complex<T>>,
    s_minus: Vec<Complex<T>>,
    s_plus: Vec<Complex<T>>,
    modulation: Vec<Complex<T>>,
}

impl<T: Scalar> FourierSweep<T> {
    pub(crate) fn new(c: &CirculantCol<T>, s: &SkewCirculantCol<T>, theta: T) -> Result<Self> {
        let n = c.col().len();
        let plan = FftPlan::new(n);
        let modulation: Vec<Complex<T>> = (0..n)
            .map(|j| {
                let a = T::PI() * T::from_usize_lossy(j) / T::from_usize_lossy(n);
                Complex::new(a.cos(), a.sin())
            })
            .collect();
        let mut lam: Vec<Complex<T>> = c
            .col()
            .iter()
            .map(|&v| Complex::new(v, T::zero()))
            .collect();
        plan.forward(&mut lam);
        let mut lam_s: Vec<Complex<T>> = s
            .col()
            .iter()
            .zip(&modulation)
            .map(|(&v, d)| d * v)
            .collect();
        plan.forward(&mut lam_s);
        let shift = Complex::new(theta, T::zero());
        let plus = |l: &[Complex<T>]| -> Result<Vec<Complex<T>>> {
            l.iter()
                .enumerate()
                .map(|(k, &v)| {
                    let p = shift + v;
                    let scale = theta.abs() + v.norm();
                    if p.norm() <= T::epsilon() * T::lit(16.0) * scale || p.norm() == T::zero() {
                        Err(Error::SingularShift {
                            index: k,
                            pivot: p.norm().to_f64_lossy(),
                        })
                    } else {
                        Ok(p)
                    }
                })
                .collect()
        };
        let c_plus = plus(&lam)?;
        let s_plus = plus(&lam_s)?;
        Ok(Self {
            plan,
            c_minus: lam.iter().map(|&v| shift - v).collect(),
            c_plus,
            s_minus: lam_s.iter().map(|&v| shift - v).collect(),
            s_plus,
            modulation,
        })
    }

    pub(crate) fn sweep(&self, x: &[T], b: &[T]) -> Vec<T> {
        let d = &self.modulation;
        // (θI − S) x + b
        let mut w: Vec<Complex<T>> = x.iter().zip(d).map(|(&v, d)| d * v).collect();
        self.plan.forward(&mut w);
        for (w, f) in w.iter_mut().zip(&self.s_minus) {
            *w *= f;
        }
        self.plan.inverse(&mut w);
        let rhs1: Vec<Complex<T>> = w
            .iter()
            .zip(d)
            .zip(b)
            .map(|((w, d), &b)| Complex::new((d.conj() * w).re + b, T::zero()))
            .collect();
        // (θI − C)(θI + C)⁻¹ rhs1 + b
        let mut w = rhs1;
        self.plan.forward(&mut w);
        for ((w, m), p) in w.iter_mut().zip(&self.c_minus).zip(&self.c_plus) {
            *w = *w * m / p;
        }
        self.plan.inverse(&mut w);
        // (θI + S)⁻¹ (… + b)
        let mut v: Vec<Complex<T>> = w
            .iter()
            .zip(d)
            .zip(b)
            .map(|((w, d), &b)| d * (w.re + b))
            .collect();
        self.plan.forward(&mut v);
        for (v, p) in v.iter_mut().zip(&self.s_plus) {
            *v /= p;
        }
        self.plan.inverse(&mut v);
        v.iter().zip(d).map(|(v, d)| (d.conj() * v).re).collect()
    }
}
