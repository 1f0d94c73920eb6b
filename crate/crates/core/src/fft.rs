//! Complex discrete Fourier transform of arbitrary length.
//!
//! Power-of-two lengths use an iterative radix-2 kernel. Every other length
//! is reduced to a power-of-two circular convolution with Bluestein's chirp
//! substitution `jk = (j² + k² − (k − j)²) / 2`, so all lengths cost
//! `O(n log n)`.

use num_complex::Complex;

use crate::scalar::Scalar;

/// Precomputed tables for a DFT of one fixed length.
#[derive(Debug, Clone)]
pub struct FftPlan<T> {
    len: usize,
    kernel: Kernel<T>,
}

#[derive(Debug, Clone)]
enum Kernel<T> {
    Trivial,
    Radix2(Radix2<T>),
    Bluestein(Box<Bluestein<T>>),
}

#[derive(Debug, Clone)]
struct Radix2<T> {
    len: usize,
    // twiddles[k] = exp(-2πik/len), k < len/2
    twiddles: Vec<Complex<T>>,
}

#[derive(Debug, Clone)]
struct Bluestein<T> {
    // chirp[k] = exp(-iπk²/n)
    chirp: Vec<Complex<T>>,
    // forward transform of the conjugate chirp, wrapped to the inner length
    filter: Vec<Complex<T>>,
    inner: Radix2<T>,
}

/// `exp(-2πi num/den)` evaluated with the numerator reduced modulo `den`.
fn root<T: Scalar>(num: u128, den: u128) -> Complex<T> {
    let r = num % den;
    let angle = -T::TAU() * T::lit(r as f64) / T::lit(den as f64);
    Complex::new(angle.cos(), angle.sin())
}

impl<T: Scalar> Radix2<T> {
    fn new(len: usize) -> Self {
        debug_assert!(len.is_power_of_two());
        let twiddles = (0..len / 2).map(|k| root(k as u128, len as u128)).collect();
        Self { len, twiddles }
    }

    fn forward(&self, buf: &mut [Complex<T>]) {
        let n = self.len;
        if n <= 1 {
            return;
        }
        let bits = n.trailing_zeros();
        for i in 0..n {
            let j = i.reverse_bits() >> (usize::BITS - bits);
            if j > i {
                buf.swap(i, j);
            }
        }
        let mut size = 2;
        while size <= n {
            let half = size / 2;
            let step = n / size;
            for start in (0..n).step_by(size) {
                for k in 0..half {
                    let w = self.twiddles[k * step];
                    let a = buf[start + k];
                    let b = buf[start + k + half] * w;
                    buf[start + k] = a + b;
                    buf[start + k + half] = a - b;
                }
            }
            size *= 2;
        }
    }

    fn inverse_unscaled(&self, buf: &mut [Complex<T>]) {
        for v in buf.iter_mut() {
            *v = v.conj();
        }
        self.forward(buf);
        for v in buf.iter_mut() {
            *v = v.conj();
        }
    }
}

impl<T: Scalar> Bluestein<T> {
    fn new(n: usize) -> Self {
        let inner_len = (2 * n - 1).next_power_of_two();
        let inner = Radix2::new(inner_len);
        // exp(-iπk²/n) = exp(-2πi k² / 2n)
        let chirp: Vec<Complex<T>> = (0..n)
            .map(|k| {
                let k = k as u128;
                root(k * k, 2 * n as u128)
            })
            .collect();
        let mut filter = vec![Complex::new(T::zero(), T::zero()); inner_len];
        filter[0] = chirp[0].conj();
        for k in 1..n {
            filter[k] = chirp[k].conj();
            filter[inner_len - k] = chirp[k].conj();
        }
        inner.forward(&mut filter);
        Self {
            chirp,
            filter,
            inner,
        }
    }

    fn forward(&self, buf: &mut [Complex<T>]) {
        let n = buf.len();
        let m = self.inner.len;
        let mut work = vec![Complex::new(T::zero(), T::zero()); m];
        for k in 0..n {
            work[k] = buf[k] * self.chirp[k];
        }
        self.inner.forward(&mut work);
        for (w, f) in work.iter_mut().zip(&self.filter) {
            *w *= *f;
        }
        self.inner.inverse_unscaled(&mut work);
        let scale = T::one() / T::from_usize_lossy(m);
        for k in 0..n {
            buf[k] = work[k] * self.chirp[k] * scale;
        }
    }
}

impl<T: Scalar> FftPlan<T> {
    /// Plans a transform of length `len` (any `len >= 1`).
    pub fn new(len: usize) -> Self {
        let kernel = if len <= 1 {
            Kernel::Trivial
        } else if len.is_power_of_two() {
            Kernel::Radix2(Radix2::new(len))
        } else {
            Kernel::Bluestein(Box::new(Bluestein::new(len)))
        };
        Self { len, kernel }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// In-place unnormalized forward transform `X_k = Σ_j x_j e^{-2πijk/n}`.
    ///
    /// Panics if `buf.len()` differs from the planned length.
    pub fn forward(&self, buf: &mut [Complex<T>]) {
        assert_eq!(buf.len(), self.len, "buffer length must match the plan");
        match &self.kernel {
            Kernel::Trivial => {}
            Kernel::Radix2(r) => r.forward(buf),
            Kernel::Bluestein(b) => b.forward(buf),
        }
    }

    /// In-place inverse transform, including the `1/n` factor.
    pub fn inverse(&self, buf: &mut [Complex<T>]) {
        for v in buf.iter_mut() {
            *v = v.conj();
        }
        self.forward(buf);
        let scale = T::one() / T::from_usize_lossy(self.len.max(1));
        for v in buf.iter_mut() {
            *v = v.conj() * scale;
        }
    }
}

/// One-shot DFT: forward is unnormalized, inverse divides by `n`.
pub fn dft<T: Scalar>(x: &[Complex<T>], inverse: bool) -> Vec<Complex<T>> {
    let plan = FftPlan::new(x.len());
    let mut buf = x.to_vec();
    if buf.is_empty() {
        return buf;
    }
    if inverse {
        plan.inverse(&mut buf);
    } else {
        plan.forward(&mut buf);
    }
    buf
}
