//! The generating function w(z): recurrence vs. product oracle, closed form,
//! and the operator identities behind it.

use ncho_core::heun::{
    factored_residual, heun_coefficients, heun_residual, w_closed, w_coeff_oracle, HeunSeries, J0,
};

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / y.abs()
}

#[test]
fn recurrence_matches_cauchy_product_to_500() {
    let s = heun_coefficients(500);
    let o = w_coeff_oracle(500);
    let worst = s
        .coeffs()
        .iter()
        .zip(o.coeffs())
        .map(|(j, r)| rel(*j, J0 * r))
        .fold(0.0, f64::max);
    assert!(worst < 1e-13, "worst relative deviation {worst:e}");
}

#[test]
fn all_coefficients_finite_and_first_ratio_exact() {
    let s = heun_coefficients(2000);
    assert!(s.coeffs().iter().all(|j| j.is_finite() && *j > 0.0));
    assert_eq!(s.coeffs()[0], J0);
    assert_eq!(s.coeffs()[1] / s.coeffs()[0], 0.75);
}

#[test]
fn series_agrees_with_closed_form_on_negative_half_interval() {
    let s = heun_coefficients(400);
    for i in 0..=50 {
        let z = -0.5 * i as f64 / 50.0;
        assert!(rel(s.eval(z), w_closed(z).unwrap()) < 1e-11, "z={z}");
    }
}

#[test]
fn truncated_series_solves_the_heun_equation() {
    let s = heun_coefficients(200);
    let z = -0.3;
    assert!(heun_residual(&s, z).abs() < 1e-10 * s.eval(z).abs());
    let s = heun_coefficients(400);
    assert!(heun_residual(&s, 0.2).abs() < 1e-8);
    for z in [-0.4, -0.1, 0.2] {
        assert!(
            heun_residual(&s, z).abs() < 1e-10 * s.eval(z).abs(),
            "z={z}"
        );
    }
}

#[test]
fn factored_form_is_four_times_heun_operator() {
    // On an exact solution both residuals are rounding noise, so they are
    // compared against the scale of w.
    for (n, z) in [
        (200, -0.3),
        (400, 0.4),
        (400, -0.4),
        (400, -0.1),
        (400, 0.2),
    ] {
        let s = heun_coefficients(n);
        let h = heun_residual(&s, z);
        let f = factored_residual(&s, z);
        assert!((f - 4.0 * h).abs() < 1e-10 * s.eval(z).abs(), "z={z}");
    }
    // On series that do not solve the equation the residuals are O(1) and
    // the ratio is pinned.
    let perturbed = [
        HeunSeries::from_coeffs(vec![1.0, -2.0, 0.5, 3.0, -1.25]),
        HeunSeries::from_coeffs((0..30).map(|k| 1.0 / (k as f64 + 1.0)).collect()),
        heun_coefficients(0),
    ];
    for s in &perturbed {
        for z in [-0.3, 0.0, 0.4] {
            let h = heun_residual(s, z);
            let f = factored_residual(s, z);
            assert!(h.abs() > 1e-3);
            assert!(rel(f / h, 4.0) < 1e-10, "z={z}: {f} vs {h}");
        }
    }
}

/// η(t) = (1 − z)·w(z) with z = t/(t − 1), through the closed form.
fn eta(t: f64) -> f64 {
    let z = t / (t - 1.0);
    (1.0 - z) * w_closed(z).unwrap()
}

/// t(1 − t)η″ + (1 − 2t)η′ − η/4 with Richardson-extrapolated central
/// differences on steps h, h/2, h/4.
pub fn transformed_residual(t: f64, h: f64) -> f64 {
    let diffs = |h: f64| {
        let (p, m, c) = (eta(t + h), eta(t - h), eta(t));
        ((p - m) / (2.0 * h), (p - 2.0 * c + m) / (h * h))
    };
    let (a, b, c) = (diffs(h), diffs(h / 2.0), diffs(h / 4.0));
    let extrapolate = |x: f64, y: f64, z: f64| {
        let (xy, yz) = ((4.0 * y - x) / 3.0, (4.0 * z - y) / 3.0);
        (16.0 * yz - xy) / 15.0
    };
    let d1 = extrapolate(a.0, b.0, c.0);
    let d2 = extrapolate(a.1, b.1, c.1);
    t * (1.0 - t) * d2 + (1.0 - 2.0 * t) * d1 - 0.25 * eta(t)
}

#[test]
fn change_of_variables_gives_hypergeometric_equation() {
    for i in 0..=50 {
        let t = 0.5 * i as f64 / 50.0;
        let r = transformed_residual(t, 0.02);
        assert!(r.abs() < 1e-9, "t={t}: residual {r:e}");
    }
}

#[test]
fn plain_step_1e5_differences_hit_the_rounding_floor() {
    // Documented limitation: without extrapolation the second difference at
    // h = 1e-5 carries ~eps·|η|/h² ≈ 1e-6 of rounding noise.
    let t = 0.3;
    let h = 1e-5;
    let (p, m, c) = (eta(t + h), eta(t - h), eta(t));
    let r = t * (1.0 - t) * (p - 2.0 * c + m) / (h * h) + (1.0 - 2.0 * t) * (p - m) / (2.0 * h)
        - 0.25 * c;
    assert!(r.abs() < 1e-4);
}
