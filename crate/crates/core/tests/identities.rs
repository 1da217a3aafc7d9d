//! Classical hypergeometric identities, checked with randomized parameters.

use ncho_core::hypergeom::{elliptic_k, gauss_2f1, gauss_2f1_neg, hyper_3f2, HyperParams2F1};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::FRAC_PI_2;

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / y.abs()
}

fn f21(a: f64, b: f64, c: f64, x: f64) -> f64 {
    let p = HyperParams2F1::new(a, b, c).unwrap();
    if x < 0.0 {
        gauss_2f1_neg(&p, x).unwrap()
    } else {
        gauss_2f1(&p, x).unwrap()
    }
}

#[test]
fn pfaff_both_forms_on_long_negative_axis() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9faf);
    for _ in 0..20 {
        let a = rng.gen_range(0.05..1.5);
        let b = rng.gen_range(0.05..1.5);
        let c = rng.gen_range(0.3..2.5);
        let x = rng.gen_range(-50.0..0.0);
        let y = x / (x - 1.0);
        let p = HyperParams2F1::new(a, b, c).unwrap();
        let value = gauss_2f1_neg(&p, x).unwrap();
        let a_form =
            (1.0 - x).powf(-a) * gauss_2f1(&HyperParams2F1::new(a, c - b, c).unwrap(), y).unwrap();
        // the same transformation with the roles of a and b exchanged
        let b_form =
            (1.0 - x).powf(-b) * gauss_2f1(&HyperParams2F1::new(c - a, b, c).unwrap(), y).unwrap();
        assert!(rel(value, a_form) < 1e-12, "a={a} b={b} c={c} x={x}");
        assert!(
            rel(value, b_form) < 1e-11,
            "a={a} b={b} c={c} x={x}: {value} vs {b_form}"
        );
    }
}

#[test]
fn clausen_quarter_case() {
    for i in 0..=9 {
        let x = 0.1 * i as f64;
        let f = f21(0.25, 0.25, 1.0, x);
        assert!(rel(hyper_3f2(0.5, 0.5, 0.5, 1.0, 1.0, x).unwrap(), f * f) < 1e-11);
    }
}

#[test]
fn clausen_random_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc1a5);
    for _ in 0..20 {
        let a = rng.gen_range(0.0..1.0);
        let b = rng.gen_range(0.0..1.0);
        let x = rng.gen_range(0.0..0.9);
        let f = f21(a, b, a + b + 0.5, x);
        let g = hyper_3f2(2.0 * a, 2.0 * b, a + b, 2.0 * a + 2.0 * b, a + b + 0.5, x).unwrap();
        assert!(rel(g, f * f) < 1e-11, "a={a} b={b} x={x}");
    }
}

fn quadratic_sides(a: f64, b: f64, x: f64) -> (f64, f64) {
    let lhs = f21(a, b, 2.0 * a, x);
    let y = x / (2.0 - x);
    let rhs = (1.0 - 0.5 * x).powf(-b) * f21(0.5 * b, 0.5 * (b + 1.0), a + 0.5, y * y);
    (lhs, rhs)
}

#[test]
fn quadratic_transformation_half_half() {
    for i in 0..=9 {
        let (l, r) = quadratic_sides(0.5, 0.5, 0.1 * i as f64);
        assert!(rel(l, r) < 1e-11);
    }
}

#[test]
fn quadratic_transformation_random_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3_13);
    for _ in 0..20 {
        let a = rng.gen_range(0.1..2.0);
        let b = rng.gen_range(0.1..2.0);
        let x = rng.gen_range(0.0..0.9);
        let (l, r) = quadratic_sides(a, b, x);
        assert!(rel(l, r) < 1e-11, "a={a} b={b} x={x}");
    }
}

#[test]
fn agm_against_series_on_grid() {
    let n = 200;
    for i in 0..=n {
        let k2 = -5.0 + 5.99 * i as f64 / n as f64;
        let k = elliptic_k(k2).unwrap();
        let f = f21(0.5, 0.5, 1.0, k2);
        assert!(rel(k, FRAC_PI_2 * f) < 1e-13, "k2={k2}");
    }
}

#[test]
fn agm_against_trapezoid_quadrature() {
    // K = ∫₀^{π/2} dθ/√(1 − k² sin²θ) = (π/2)·mean over a full period
    use ncho_core::{quad, ComplexValue};
    for k2 in [-5.0, -1.0, 0.3, 0.9] {
        let r = quad::periodic_trapezoid(
            |t: f64| ComplexValue::real(1.0 / (1.0 - k2 * t.sin() * t.sin()).sqrt()),
            quad::DEFAULT_N_MAX,
            1e-15,
        )
        .unwrap();
        assert!(rel(elliptic_k(k2).unwrap(), FRAC_PI_2 * r.value.re) < 1e-14);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pfaff_identity(a in 0.05f64..1.5, b in 0.05f64..1.5, c in 0.3f64..2.5, x in -50.0f64..0.0) {
        let y = x / (x - 1.0);
        let value = gauss_2f1_neg(&HyperParams2F1::new(a, b, c).unwrap(), x).unwrap();
        let b_form = (1.0 - x).powf(-b) * gauss_2f1(&HyperParams2F1::new(c - a, b, c).unwrap(), y).unwrap();
        prop_assert!(rel(value, b_form) < 1e-11);
    }

    #[test]
    fn clausen_identity(a in 0.01f64..1.0, b in 0.01f64..1.0, x in 0.0f64..0.9) {
        let f = f21(a, b, a + b + 0.5, x);
        let g = hyper_3f2(2.0 * a, 2.0 * b, a + b, 2.0 * a + 2.0 * b, a + b + 0.5, x).unwrap();
        prop_assert!(rel(g, f * f) < 1e-11);
    }

    #[test]
    fn agm_series_agreement(k2 in -5.0f64..0.99) {
        let k = elliptic_k(k2).unwrap();
        prop_assert!(rel(k, FRAC_PI_2 * f21(0.5, 0.5, 1.0, k2)) < 1e-13);
    }
}
