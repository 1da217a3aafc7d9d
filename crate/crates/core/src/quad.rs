//! Quadrature kernels for analytic periodic integrands.
//!
//! The trapezoid rule on a full period converges geometrically for
//! integrands analytic in a strip around the real axis, and halving the
//! node spacing reuses every previous node. The difference between two
//! successive levels bounds the error of the coarser one, so it is a
//! conservative estimate for the finer.

use core::f64::consts::{PI, TAU};

use crate::complex::{csqrt, ComplexValue};
use crate::error::{Error, Result};
use crate::math;
use crate::sum::CompensatedSum;

pub const DEFAULT_N_MAX: usize = 1 << 20;
pub const DEFAULT_TOL: f64 = 1e-13;

const N_START: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: ComplexValue,
    /// Nodes in the final trapezoid sum.
    pub nodes: usize,
    /// |value(n) − value(n/2)| at the last doubling.
    pub err_estimate: f64,
}

/// Mean value (1/2π)∫₀^{2π} f(θ) dθ of a 2π-periodic function.
///
/// Starts from 8 nodes and doubles until two successive sums differ by less
/// than `tol` (absolute, in the larger of the two components).
pub fn periodic_trapezoid<F>(f: F, n_max: usize, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> ComplexValue,
{
    if !n_max.is_power_of_two() || n_max < 2 * N_START {
        return Err(Error::Domain {
            what: "trapezoid node cap (power of two >= 16)",
            value: n_max as f64,
        });
    }
    let mut re = CompensatedSum::new();
    let mut im = CompensatedSum::new();
    for j in 0..N_START {
        let v = f(TAU * j as f64 / N_START as f64);
        re.add(v.re);
        im.add(v.im);
    }
    let mut n = N_START;
    let mut prev = ComplexValue::new(re.value(), im.value()).scale(1.0 / n as f64);
    let mut change = f64::INFINITY;
    while n < n_max {
        // the new nodes sit at the midpoints of the current ones
        let h = TAU / (2 * n) as f64;
        for j in 0..n {
            let v = f(h * (2 * j + 1) as f64);
            re.add(v.re);
            im.add(v.im);
        }
        n *= 2;
        let cur = ComplexValue::new(re.value(), im.value()).scale(1.0 / n as f64);
        change = math::abs(cur.re - prev.re).max(math::abs(cur.im - prev.im));
        if change < tol {
            return Ok(QuadResult {
                value: cur,
                nodes: n,
                err_estimate: change,
            });
        }
        prev = cur;
    }
    Err(Error::NoConvergence {
        what: "periodic trapezoid",
        iterations: n,
        last_change: change,
    })
}

/// ∫₀¹ f(u) du / √(u(1 − u)).
///
/// With u = sin²θ the weight becomes the constant 2 on [0, π/2]; extending
/// by symmetry to the full period gives π times the mean of f(sin²θ).
pub fn beta_weighted<F>(f: F, n_max: usize, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    let inner = periodic_trapezoid(
        |theta| {
            let s = math::sin(theta);
            ComplexValue::real(f(s * s))
        },
        n_max,
        tol / PI,
    )?;
    Ok(QuadResult {
        value: inner.value.scale(PI),
        nodes: inner.nodes,
        err_estimate: inner.err_estimate * PI,
    })
}

/// (1/2π)∫₀^{2π} (1 + sign·i·a·cos θ)^(−1/2) dθ with the principal root.
///
/// For real a ≥ 0 this equals ₂F₁(¼, ¾; 1; −a²) for either sign; the
/// imaginary parts of θ and π − θ cancel.
pub fn elliptic_mean(a: f64, sign: f64, n_max: usize, tol: f64) -> Result<QuadResult> {
    let ia = ComplexValue::new(0.0, sign * a);
    periodic_trapezoid(
        |theta| csqrt(ComplexValue::ONE + ia.scale(math::cos(theta))).recip(),
        n_max,
        tol,
    )
}
