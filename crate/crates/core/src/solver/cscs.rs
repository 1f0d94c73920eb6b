use super::config::{SolveReport, SolverBackend, SolverConfig};
use super::fourier::FourierSweep;
use crate::error::{check_len, Result};
use crate::matvec::ToeplitzOperator;
use crate::scalar::{norm2, Scalar};
use crate::schur::{ShiftSign, Side};
use crate::structured::{cscs_split, ToeplitzBands};

/// Precomputed state for repeated CSCS sweeps
/// `x ↦ (θI+S)⁻¹[(θI−C)(θI+C)⁻¹((θI−S)x + b) + b]`.
#[derive(Debug, Clone)]
pub struct CscsSolver<T> {
    theta: T,
    backend: SolverBackend,
    op: ToeplitzOperator<T>,
    fourier: Option<FourierSweep<T>>,
}

impl<T: Scalar> CscsSolver<T> {
    /// Fails with `SingularShift` when `θI + C` or `θI + S` is singular.
    pub fn new(t: &ToeplitzBands<T>, theta: T, backend: SolverBackend) -> Result<Self> {
        let op = ToeplitzOperator::new(t)?;
        let zeros = vec![T::zero(); t.n()];
        op.circulant.core().shifted_solve(theta, &zeros)?;
        op.skew.core().shifted_solve(theta, &zeros)?;
        let fourier = match backend {
            SolverBackend::DctDst => None,
            SolverBackend::Fft => {
                let (c, s) = cscs_split(t);
                Some(FourierSweep::new(&c, &s, theta)?)
            }
        };
        Ok(Self {
            theta,
            backend,
            op,
            fourier,
        })
    }

    pub fn n(&self) -> usize {
        self.op.n()
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn backend(&self) -> SolverBackend {
        self.backend
    }

    pub fn operator(&self) -> &ToeplitzOperator<T> {
        &self.op
    }

    /// Positive-definiteness warnings for `C` and `S`, from the real parts of
    /// their eigenvalues.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (name, part) in [("C", &self.op.circulant), ("S", &self.op.skew)] {
            let a = part.spectrum().min_alpha();
            if a <= T::zero() {
                out.push(format!(
                    "{name} is not positive definite (smallest eigenvalue real part {a})"
                ));
            }
        }
        out
    }

    /// One full iteration `x_k → x_{k+1}`.
    pub fn sweep(&self, x: &[T], b: &[T]) -> Result<Vec<T>> {
        check_len(self.n(), x.len())?;
        check_len(self.n(), b.len())?;
        if let Some(f) = &self.fourier {
            return Ok(f.sweep(x, b));
        }
        let theta = self.theta;
        let (c, s) = (&self.op.circulant, &self.op.skew);
        debug_assert_eq!(c.kind(), Side::Circulant);

        // (θI − S) x + b
        let a = s.to_spectral(x)?;
        let a = s.core().apply(theta, ShiftSign::Minus, &a)?;
        let mut r1 = s.from_spectral(&a)?;
        add_assign(&mut r1, b);

        // x_{k+½} = U (θI + Ω)⁻¹ Uᵀ r1, then (θI − C) x_{k+½} + b = U (θI − Ω) h + b
        let w = c.to_spectral(&r1)?;
        let h = c.core().shifted_solve(theta, &w)?;
        let g = c.core().apply(theta, ShiftSign::Minus, &h)?;
        let mut r2 = c.from_spectral(&g)?;
        add_assign(&mut r2, b);

        // x_{k+1} = Ũ (θI + Σ)⁻¹ Ũᵀ r2
        let v = s.to_spectral(&r2)?;
        let v = s.core().shifted_solve(theta, &v)?;
        s.from_spectral(&v)
    }

    /// `b − T x` with the fast Toeplitz product.
    pub fn residual(&self, x: &[T], b: &[T]) -> Result<Vec<T>> {
        check_len(self.n(), b.len())?;
        let tx = self.op.apply(x)?;
        Ok(b.iter().zip(tx).map(|(&b, t)| b - t).collect())
    }
}

fn add_assign<T: Scalar>(x: &mut [T], y: &[T]) {
    for (a, &b) in x.iter_mut().zip(y) {
        *a += b;
    }
}

/// Runs the CSCS iteration until `‖r_k‖/‖r_0‖ ≤ tol` or `max_iters` sweeps.
///
/// A zero initial residual returns immediately with no iterations. A
/// non-finite residual stops the loop with `converged = false`.
pub fn cscs_solve<T: Scalar>(
    t: &ToeplitzBands<T>,
    b: &[T],
    cfg: &SolverConfig<T>,
) -> Result<SolveReport<T>> {
    let n = t.n();
    check_len(n, b.len())?;
    cfg.validate(n)?;
    let solver = CscsSolver::new(t, cfg.theta, cfg.backend)?;
    let warnings = solver.warnings();

    let mut x = cfg
        .initial_guess
        .clone()
        .unwrap_or_else(|| vec![T::zero(); n]);
    let r0 = norm2(&solver.residual(&x, b)?);
    let mut residuals = Vec::new();
    let mut iterates = cfg.keep_iterates.then(Vec::new);
    let mut converged = r0 == T::zero();

    if !converged {
        for _ in 0..cfg.max_iters {
            x = solver.sweep(&x, b)?;
            let rel = norm2(&solver.residual(&x, b)?) / r0;
            residuals.push(rel);
            if let Some(it) = iterates.as_mut() {
                it.push(x.clone());
            }
            if rel <= cfg.tol {
                converged = true;
                break;
            }
            if !rel.is_finite() {
                break;
            }
        }
    }

    Ok(SolveReport {
        solution: x,
        iterations: residuals.len(),
        residuals,
        converged,
        warnings,
        iterates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dtt::{reset_transform_tally, transform_tally};
    use crate::error::Error;
    use crate::scalar::{max_abs_diff, rel_err2};
    use crate::structured::Structured;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    /// Diagonally dominant bands with a nonsymmetric part, so `C` and `S`
    /// are positive definite.
    fn random_pd(rng: &mut StdRng, n: usize) -> ToeplitzBands<f64> {
        let mut bands: Vec<f64> = (0..2 * n - 1)
            .map(|i| {
                let k = (i as f64 - (n as f64 - 1.0)).abs();
                rng.gen_range(-1.0..1.0) / (1.0 + k).powi(2)
            })
            .collect();
        bands[n - 1] = 6.0;
        ToeplitzBands::from_bands(bands).unwrap()
    }

    #[test]
    fn scaled_identity_in_one_step() {
        for backend in [SolverBackend::DctDst, SolverBackend::Fft] {
            let t = ToeplitzBands::from_fn(8, |k| if k == 0 { 2.0 } else { 0.0 }).unwrap();
            let b = vec![1.0; 8];
            let rep = cscs_solve(&t, &b, &SolverConfig::new(1.0).with_backend(backend)).unwrap();
            assert_eq!(rep.iterations, 1, "{backend}");
            assert!(rep.converged);
            assert!(max_abs_diff(&rep.solution, &[0.5; 8]) < 1e-14);
            assert!(rep.warnings.is_empty());
        }
    }

    #[test]
    fn exact_solution_is_a_fixed_point() {
        let mut rng = StdRng::seed_from_u64(5);
        for n in [1, 2, 7, 16, 33] {
            let t = random_pd(&mut rng, n);
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let b = t.naive_matvec(&x).unwrap();
            for backend in [SolverBackend::DctDst, SolverBackend::Fft] {
                let s = CscsSolver::new(&t, 3.0, backend).unwrap();
                let y = s.sweep(&x, &b).unwrap();
                assert!(max_abs_diff(&x, &y) < 1e-10, "n = {n} {backend}");
            }
        }
    }

    #[test]
    fn backends_agree_step_by_step() {
        let mut rng = StdRng::seed_from_u64(11);
        for n in [3, 10, 64, 129] {
            let t = random_pd(&mut rng, n);
            let b: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let cfg = SolverConfig::new(4.0).with_max_iters(30).keeping_iterates();
            let a = cscs_solve(&t, &b, &cfg).unwrap();
            let f = cscs_solve(&t, &b, &cfg.clone().with_backend(SolverBackend::Fft)).unwrap();
            assert_eq!(a.iterations, f.iterations);
            for (p, q) in a.iterates.unwrap().iter().zip(f.iterates.unwrap().iter()) {
                assert!(max_abs_diff(p, q) < 1e-8, "n = {n}");
            }
        }
    }

    #[test]
    fn converged_solution_checks_against_naive_product() {
        let mut rng = StdRng::seed_from_u64(12);
        let n = 50;
        let t = random_pd(&mut rng, n);
        let b = vec![1.0; n];
        let rep = cscs_solve(&t, &b, &SolverConfig::new(6.0)).unwrap();
        assert!(rep.converged);
        let tx = t.naive_matvec(&rep.solution).unwrap();
        assert!(rel_err2(&tx, &b) <= 1e-7);
        assert!(*rep.residuals.last().unwrap() <= 1e-7);
    }

    #[test]
    fn six_transform_pairs_per_sweep() {
        let mut rng = StdRng::seed_from_u64(13);
        for n in [64, 65] {
            let t = random_pd(&mut rng, n);
            let s = CscsSolver::new(&t, 3.0, SolverBackend::DctDst).unwrap();
            let b = vec![1.0; n];
            reset_transform_tally();
            s.sweep(&b, &b).unwrap();
            let tally = transform_tally();
            assert_eq!((tally.cosine.calls, tally.sine.calls), (6, 6), "n = {n}");
            let m = n / 2;
            assert!(tally.cosine.min_size >= m - 1 && tally.cosine.max_size <= m + 1);
            assert!(tally.sine.min_size >= m - 1 && tally.sine.max_size <= m + 1);
        }
    }

    #[test]
    fn singular_shift_is_an_error() {
        // C = S = −I/2 ⇒ θ + α = 0 at θ = 1/2
        let t = ToeplitzBands::from_fn(4, |k| if k == 0 { -1.0 } else { 0.0 }).unwrap();
        for backend in [SolverBackend::DctDst, SolverBackend::Fft] {
            let r = cscs_solve(&t, &[1.0; 4], &SolverConfig::new(0.5).with_backend(backend));
            assert!(matches!(r, Err(Error::SingularShift { .. })), "{backend}");
        }
    }

    #[test]
    fn indefinite_parts_only_warn() {
        // t_0 = 1, t_{±1} = 0.9: tridiagonal PD but C has α = 0.5 − 0.9 < 0
        let t = ToeplitzBands::from_fn(6, |k| match k.abs() {
            0 => 1.0,
            1 => 0.9,
            _ => 0.0,
        })
        .unwrap();
        let rep = cscs_solve(&t, &[1.0; 6], &SolverConfig::new(1.0).with_max_iters(5)).unwrap();
        assert!(!rep.warnings.is_empty());
        assert_eq!(rep.iterations, rep.residuals.len());
    }

    #[test]
    fn zero_rhs_needs_no_iterations() {
        let t = ToeplitzBands::from_bands(vec![1.0, 4.0, 1.0]).unwrap();
        let rep = cscs_solve(&t, &[0.0, 0.0], &SolverConfig::new(2.0)).unwrap();
        assert_eq!(rep.iterations, 0);
        assert!(rep.converged);
    }

    #[test]
    fn runs_in_single_precision() {
        let t = ToeplitzBands::from_fn(20, |k| match k.abs() {
            0 => 4.0f32,
            1 => 1.0,
            _ => 0.0,
        })
        .unwrap();
        let rep = cscs_solve(&t, &[1.0f32; 20], &SolverConfig::new(2.0f32).with_tol(1e-5)).unwrap();
        assert!(rep.converged);
    }
}
