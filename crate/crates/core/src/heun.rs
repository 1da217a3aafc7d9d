//! Generating function w(z) = Σ Jₙ zⁿ of the coefficients entering the
//! series for ζ_Q(2).
//!
//! w solves the singly confluent Heun equation
//!
//! ```text
//! z(1 − z)² w″ + (1 − 3z)(1 − z) w′ + (z − ¾) w = 0,   w(0) = π²/2,
//! ```
//!
//! and matching powers of z gives the three-term recurrence
//!
//! ```text
//! (n + 1)² J_{n+1} = (2n² + 2n + ¾) Jₙ − n² J_{n−1}.
//! ```
//!
//! In closed form w(z) = J₀ (1 − z)⁻¹ ₂F₁(½, ½; 1; z/(z − 1)), equivalently
//! J₀ (1 − z)^(−1/2) ₂F₁(½, ½; 1; z) after a Pfaff transformation.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hypergeom::{self, HyperParams2F1};
use crate::math;
use crate::sum::DoubleDouble;

/// w(0) = 3ζ(2) = π²/2.
pub const J0: f64 = PI * PI / 2.0;

/// Truncated coefficient list J₀..J_N.
#[derive(Debug, Clone, PartialEq)]
pub struct HeunSeries {
    coeffs: Vec<f64>,
}

impl HeunSeries {
    pub fn from_coeffs(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Number of stored coefficients, N + 1.
    pub fn n_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Truncated sum and its first two derivatives at z.
    pub fn eval_with_derivatives(&self, z: f64) -> (f64, f64, f64) {
        let (mut p, mut dp, mut ddp) = (0.0, 0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            ddp = ddp * z + 2.0 * dp;
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp, ddp)
    }

    pub fn eval(&self, z: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * z + c)
    }
}

/// Unbounded stream J₀, J₁, … from the three-term recurrence.
///
/// The recurrence has a double characteristic root at 1, so rounding errors
/// grow along a neighbouring solution; it is carried in double-double to
/// keep the f64 output correctly rounded far out (n ~ 10³ and beyond).
#[derive(Debug, Clone)]
pub struct HeunCoefficients {
    n: usize,
    prev: DoubleDouble,
    cur: DoubleDouble,
}

impl HeunCoefficients {
    pub fn new() -> Self {
        Self {
            n: 0,
            prev: DoubleDouble::default(),
            cur: DoubleDouble::from_f64(J0),
        }
    }
}

impl Default for HeunCoefficients {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for HeunCoefficients {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let out = self.cur.to_f64();
        // all three coefficients are exact in f64 for n < 2²⁶
        let n = self.n as f64;
        let next = self
            .cur
            .mul_f64(2.0 * n * n + 2.0 * n + 0.75)
            .sub(self.prev.mul_f64(n * n))
            .div_f64((n + 1.0) * (n + 1.0));
        self.prev = self.cur;
        self.cur = next;
        self.n += 1;
        Some(out)
    }
}

/// J₀..J_N from the recurrence.
pub fn heun_coefficients(n: usize) -> HeunSeries {
    HeunSeries::from_coeffs(HeunCoefficients::new().take(n + 1).collect())
}

/// Jₙ/J₀ for n ≤ N as the Cauchy product of (1 − z)^(−1/2) = Σ C(2m, m)(z/4)^m
/// with ₂F₁(½, ½; 1; z) = Σ ((½)_k / k!)² z^k.
pub fn w_coeff_oracle(n: usize) -> HeunSeries {
    // (½)_m / m! = C(2m, m)/4^m, so both factors are built from one list.
    let mut central = Vec::with_capacity(n + 1);
    let mut b = 1.0;
    for m in 0..=n {
        central.push(b);
        b *= (2 * m + 1) as f64 / (2 * m + 2) as f64;
    }
    let coeffs = (0..=n)
        .map(|k| {
            (0..=k)
                .map(|m| central[m] * central[k - m] * central[k - m])
                .sum()
        })
        .collect();
    HeunSeries::from_coeffs(coeffs)
}

/// w(z) = J₀ (1 − z)⁻¹ ₂F₁(½, ½; 1; z/(z − 1)) for z < ½.
pub fn w_closed(z: f64) -> Result<f64> {
    if !(z < 0.5) {
        return Err(Error::Domain {
            what: "w closed form (needs z < 1/2)",
            value: z,
        });
    }
    Ok(J0 / (1.0 - z) * half_half_one(z / (z - 1.0))?)
}

/// ₂F₁(½, ½; 1; t) = (2/π) K(t): series for small |t|, AGM near the unit
/// circle where the series slows down.
fn half_half_one(t: f64) -> Result<f64> {
    if math::abs(t) < 0.9 {
        hypergeom::gauss_2f1(
            &HyperParams2F1 {
                a: 0.5,
                b: 0.5,
                c: 1.0,
            },
            t,
        )
    } else {
        Ok(hypergeom::elliptic_k(t)? * 2.0 / PI)
    }
}

/// z(1 − z)² w″ + (1 − 3z)(1 − z) w′ + (z − ¾) w on the truncated series.
pub fn heun_residual(s: &HeunSeries, z: f64) -> f64 {
    let (w, dw, ddw) = s.eval_with_derivatives(z);
    let one_m = 1.0 - z;
    z * one_m * one_m * ddw + (1.0 - 3.0 * z) * one_m * dw + (z - 0.75) * w
}

/// 4(1 − z) ∂_z z ∂_z (1 − z) w + w on the truncated series.
///
/// Built by coefficient manipulation rather than by expanding the operator:
/// v = (1 − z)w, y = z·v′, then 4(1 − z)·y′ + w. Expanding by the Leibniz
/// rule shows this is exactly 4 × [`heun_residual`].
pub fn factored_residual(s: &HeunSeries, z: f64) -> f64 {
    let j = s.coeffs();
    let v: Vec<f64> = (0..=j.len())
        .map(|n| j.get(n).copied().unwrap_or(0.0) - if n > 0 { j[n - 1] } else { 0.0 })
        .collect();
    let y = HeunSeries::from_coeffs(v.iter().enumerate().map(|(n, &c)| n as f64 * c).collect());
    let (_, dy, _) = y.eval_with_derivatives(z);
    4.0 * (1.0 - z) * dy + s.eval(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(x: f64, y: f64) -> f64 {
        (x - y).abs() / y.abs()
    }

    #[test]
    fn first_coefficients() {
        let s = heun_coefficients(0);
        assert_eq!(s.coeffs(), &[J0]);
        let s = heun_coefficients(2);
        assert_eq!(s.coeffs()[1], 0.75 * J0);
        assert!(rel(s.coeffs()[2], 41.0 / 64.0 * J0) < 1e-15);
    }

    #[test]
    fn oracle_first_coefficients() {
        let o = w_coeff_oracle(2);
        assert_eq!(o.coeffs()[0], 1.0);
        assert_eq!(o.coeffs()[1], 0.75);
        assert_eq!(o.coeffs()[2], 41.0 / 64.0);
    }

    #[test]
    fn recurrence_matches_oracle_through_eight() {
        let s = heun_coefficients(8);
        let o = w_coeff_oracle(8);
        for (j, r) in s.coeffs().iter().zip(o.coeffs()) {
            assert!(rel(*j, J0 * r) < 1e-14);
        }
    }

    #[test]
    fn constant_series_residuals_at_origin() {
        let s = heun_coefficients(0);
        assert_eq!(heun_residual(&s, 0.0), -0.75 * J0);
        assert_eq!(factored_residual(&s, 0.0), -3.0 * J0);
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(w_closed(0.0).unwrap(), J0);
        // 40-digit reference: J₀/2 · ₂F₁(½, ½; 1; ½)
        assert!(rel(w_closed(-1.0).unwrap(), 2.912_373_692_708_428_297) < 1e-15);
        assert!(matches!(w_closed(0.5), Err(Error::Domain { .. })));
    }

    #[test]
    fn closed_form_matches_series_inside_disc() {
        let s = heun_coefficients(60);
        let z = -0.1;
        assert!(rel(s.eval(z), w_closed(z).unwrap()) < 1e-12);
    }

    #[test]
    fn alternating_series_at_minus_one_converges_to_closed_form() {
        // z = −1 sits on the circle of convergence; averaging consecutive
        // partial sums of the alternating series repeatedly (Euler's
        // transform in its simplest form) recovers the limit.
        let s = heun_coefficients(2000);
        let mut partial = Vec::new();
        let mut acc = 0.0;
        for (n, j) in s.coeffs().iter().enumerate() {
            acc += if n % 2 == 0 { *j } else { -*j };
            partial.push(acc);
        }
        let mut level: Vec<f64> = partial[partial.len() - 40..].to_vec();
        while level.len() > 1 {
            level = level.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        }
        assert!(rel(level[0], w_closed(-1.0).unwrap()) < 1e-6);
    }
}
