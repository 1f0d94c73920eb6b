use cscs_core::scalar::{max_abs_diff, rel_err2};
use cscs_core::schur::oracle::dense_u_oracle;
use cscs_core::{
    cscs_solve, iteration_matrix_rho, real_spectrum, CirculantCol, CirculantOperator, Side,
    SkewCirculantCol, SolverBackend, SolverConfig, Structured, ToeplitzBands, ToeplitzOperator,
};
use nalgebra::DMatrix;
use num_complex::Complex;
use proptest::prelude::*;

fn dense_of(m: &dyn Structured<f64>) -> DMatrix<f64> {
    let n = m.dim();
    DMatrix::from_fn(n, n, |i, j| m.entry(i, j))
}

/// Every element of `a` is within `tol` of a distinct element of `b`.
fn same_multiset(a: &[Complex<f64>], b: &[Complex<f64>], tol: f64) -> bool {
    let mut used = vec![false; b.len()];
    a.len() == b.len()
        && a.iter().all(|z| {
            let best = b
                .iter()
                .enumerate()
                .filter(|(i, _)| !used[*i])
                .min_by(|(_, p), (_, q)| (*p - z).norm().total_cmp(&(*q - z).norm()));
            match best {
                Some((i, w)) if (w - z).norm() < tol => {
                    used[i] = true;
                    true
                }
                _ => false,
            }
        })
}

fn column(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0f64..3.0, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spectrum_matches_dense_eigenvalues(col in (1usize..=32).prop_flat_map(column)) {
        for side in [Side::Circulant, Side::Skew] {
            let sp = real_spectrum(side, &col).unwrap();
            let dense = match side {
                Side::Circulant => dense_of(&CirculantCol::new(col.clone()).unwrap()),
                Side::Skew => dense_of(&SkewCirculantCol::new(col.clone()).unwrap()),
            };
            let reference: Vec<Complex<f64>> = dense.complex_eigenvalues().iter().copied().collect();
            prop_assert!(same_multiset(&sp.eigenvalues(), &reference, 1e-10), "{:?}", side);
        }
    }

    #[test]
    fn real_schur_reconstruction(col in (2usize..=33).prop_flat_map(column)) {
        let n = col.len();
        for side in [Side::Circulant, Side::Skew] {
            let m = match side {
                Side::Circulant => CirculantCol::new(col.clone()).unwrap().to_dense(),
                Side::Skew => SkewCirculantCol::new(col.clone()).unwrap().to_dense(),
            };
            let u = dense_u_oracle::<f64>(side, n);
            let core = u.transpose().matmul(&m).matmul(&u);
            let x = real_spectrum(side, &col).unwrap().to_xpattern();
            prop_assert!(core.max_abs_diff(&x.to_dense()) < 1e-10);
            for j in 0..n {
                let p = side.partner(j, n);
                for k in (0..n).filter(|&k| k != j && k != p) {
                    prop_assert!(core[(j, k)].abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn fast_products_match_naive(col in (1usize..=80).prop_flat_map(column), seed in any::<u64>()) {
        let n = col.len();
        let x: Vec<f64> = (0..n).map(|i| ((seed.wrapping_mul(31).wrapping_add(i as u64)) % 97) as f64 / 48.0 - 1.0).collect();
        let c = CirculantCol::new(col.clone()).unwrap();
        let fast = CirculantOperator::circulant(&c).unwrap().apply(&x).unwrap();
        prop_assert!(rel_err2(&fast, &c.naive_matvec(&x).unwrap()) < 1e-10);
        let s = SkewCirculantCol::new(col).unwrap();
        let fast = CirculantOperator::skew(&s).unwrap().apply(&x).unwrap();
        prop_assert!(rel_err2(&fast, &s.naive_matvec(&x).unwrap()) < 1e-10);
    }

    #[test]
    fn spectral_transforms_round_trip(col in (1usize..=64).prop_flat_map(column)) {
        for side in [Side::Circulant, Side::Skew] {
            let op = CirculantOperator::from_column(side, &col).unwrap();
            let back = op.from_spectral(&op.to_spectral(&col).unwrap()).unwrap();
            prop_assert!(max_abs_diff(&back, &col) < 1e-12);
        }
    }
}

/// Decaying symmetric bands plus an antisymmetric part, dominant diagonal.
fn test_matrix(n: usize) -> ToeplitzBands<f64> {
    ToeplitzBands::from_fn(n, |k| {
        let a = k.unsigned_abs() as f64;
        if k == 0 {
            3.0
        } else {
            1.0 / (1.0 + a).powi(2) + 0.3 * k.signum() as f64 / (1.0 + a).powi(3)
        }
    })
    .unwrap()
}

#[test]
fn toeplitz_product_at_large_order() {
    let n = 1000;
    let t = test_matrix(n);
    let x: Vec<f64> = (0..n).map(|i| (i as f64 * 0.37).sin()).collect();
    let fast = ToeplitzOperator::new(&t).unwrap().apply(&x).unwrap();
    assert!(rel_err2(&fast, &t.naive_matvec(&x).unwrap()) < 1e-10);
}

#[test]
fn late_residual_ratios_track_the_spectral_radius() {
    let n = 96;
    let t = test_matrix(n);
    let theta = 1.0;
    let rho = iteration_matrix_rho(&t, theta).unwrap();
    assert!(rho < 1.0, "rho = {rho}");
    let cfg = SolverConfig::new(theta).with_tol(1e-13);
    let rep = cscs_solve(&t, &vec![1.0; n], &cfg).unwrap();
    let usable: Vec<f64> = rep
        .residuals
        .iter()
        .copied()
        .take_while(|&r| r > 1e-11)
        .collect();
    assert!(
        usable.len() >= 11,
        "only {} usable iterations",
        usable.len()
    );
    let tail = &usable[usable.len() - 11..];
    for w in tail.windows(2) {
        assert!(
            w[1] / w[0] < rho + 0.05,
            "ratio {} vs rho {rho}",
            w[1] / w[0]
        );
    }
}

#[test]
fn backends_agree_on_larger_problem() {
    let n = 512;
    let t = test_matrix(n);
    let b: Vec<f64> = (0..n).map(|i| 1.0 + (i % 7) as f64 * 0.1).collect();
    let cfg = SolverConfig::new(2.5).keeping_iterates();
    let a = cscs_solve(&t, &b, &cfg).unwrap();
    let f = cscs_solve(&t, &b, &cfg.clone().with_backend(SolverBackend::Fft)).unwrap();
    assert!(a.converged && f.converged);
    assert_eq!(a.iterations, f.iterations);
    for (p, q) in a.iterates.unwrap().iter().zip(f.iterates.unwrap().iter()) {
        assert!(max_abs_diff(p, q) < 1e-8);
    }
    let tx = t.naive_matvec(&a.solution).unwrap();
    assert!(rel_err2(&tx, &b) <= 1e-7);
}
