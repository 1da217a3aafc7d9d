//! Hermite–Galerkin eigenvalues as an independent check on ζ_Q(2).

use ncho_core::ncho::zeta2_closed;
use ncho_core::spectral::{
    lowest_eigenvalues, parity_eigenvalues, partial_zeta, zeta2_spectral, Parity,
    SpectralTruncation,
};
use ncho_core::NchoParams;
use std::f64::consts::{PI, SQRT_2};

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / y.abs()
}

fn params(a: f64, b: f64) -> NchoParams {
    NchoParams::new(a, b).unwrap()
}

#[test]
fn equal_scaling_gives_doubly_degenerate_ladder() {
    for alpha in [SQRT_2, 2.0, 5.0] {
        let s = (alpha * alpha - 1.0_f64).sqrt();
        let low = lowest_eigenvalues(&params(alpha, alpha), 256, 40).unwrap();
        for (i, pair) in low.values.chunks(2).enumerate() {
            let exact = s * (i as f64 + 0.5);
            assert!(rel(pair[0], pair[1]) < 1e-10, "alpha={alpha} i={i}");
            assert!(
                rel(pair[0], exact) < 1e-10,
                "alpha={alpha} i={i}: {} vs {exact}",
                pair[0]
            );
        }
    }
}

#[test]
fn eigenvalues_positive_on_parameter_grid() {
    for (a, b) in [(1.05, 1.0), (2.0, 3.0), (10.0, 0.2), (0.5, 2.5), (1.5, 1.2)] {
        for parity in [Parity::Even, Parity::Odd] {
            let ev = parity_eigenvalues(&params(a, b), 128, parity).unwrap();
            assert!(ev.iter().all(|v| *v > 0.0), "{a},{b}");
            assert!(ev.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}

#[test]
fn ritz_values_do_not_increase_with_basis() {
    let p = params(2.0, 3.0);
    for parity in [Parity::Even, Parity::Odd] {
        let mut prev: Option<Vec<f64>> = None;
        for n_modes in [32, 64, 128, 256] {
            let ev = parity_eigenvalues(&p, n_modes, parity).unwrap();
            if let Some(prev) = &prev {
                for (new, old) in ev.iter().zip(prev) {
                    assert!(*new <= old + 1e-12 * old.abs(), "n_modes={n_modes}");
                }
            }
            prev = Some(ev);
        }
    }
}

#[test]
fn low_eigenvalues_converged_at_512() {
    let p = params(2.0, 3.0);
    let a = lowest_eigenvalues(&p, 512, 20).unwrap();
    let b = lowest_eigenvalues(&p, 1024, 20).unwrap();
    for (x, y) in a.values.iter().zip(&b.values) {
        assert!(rel(*x, *y) < 1e-8);
    }
    assert!(a.stable.iter().all(|&s| s));
    assert!(a.values[0] > 0.0);
}

#[test]
fn partial_sums_increase_and_stay_below_closed_form() {
    let p = params(2.0, 3.0);
    let closed = zeta2_closed(&p).unwrap().value;
    let mut prev = 0.0;
    for k in [10, 20, 50, 100, 200] {
        let s = partial_zeta(&p, 512, k).unwrap();
        assert!(s > prev && s < closed, "k={k}");
        prev = s;
    }
}

#[test]
fn spectral_matches_closed_form() {
    for (a, b) in [(2.0, 3.0), (1.5, 1.2), (10.0, 0.2), (2.0, 2.0)] {
        let p = params(a, b);
        let closed = zeta2_closed(&p).unwrap().value;
        let z = zeta2_spectral(&p, 512, 200).unwrap();
        assert!(
            rel(z.value, closed) < 1e-4,
            "{a},{b}: {} vs {closed}",
            z.value
        );
        assert!(z.err_estimate > 0.0);
    }
}

#[test]
fn decoupled_case_with_large_keep() {
    let p = params(SQRT_2, SQRT_2);
    let z = zeta2_spectral(&p, 4096, 2000).unwrap();
    assert!(rel(z.value, PI * PI) < 1e-4, "{}", z.value);
}

#[test]
fn truncation_invariants() {
    let t = SpectralTruncation::compute(&params(2.0, 3.0), 256, 100).unwrap();
    assert!(t.tail_slope > 0.0);
    assert!(t.eigenvalues.iter().all(|v| *v > 0.0));
    assert!(t.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    let (tail, err) = t.tail();
    assert!(tail > 0.0 && err < tail);
}
