//! Gauss ₂F₁, generalized ₃F₂ and the complete elliptic integral K.
//!
//! All series are summed term-by-term with incremental Pochhammer ratios and
//! a compensated accumulator. Negative arguments of any size go through the
//! Pfaff transformation
//!
//! ```text
//! ₂F₁(a, b; c; x) = (1 − x)^(−a) · ₂F₁(a, c − b; c; x/(x − 1))
//! ```
//!
//! which maps x ≤ 0 into [0, 1).

use core::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::math;
use crate::quad;
use crate::sum::CompensatedSum;

/// Above this transformed argument the ₂F₁(¼, ¾; 1; ·) evaluation switches
/// from the series to the periodic elliptic integral.
pub const DEEP_ARGUMENT: f64 = 1.0 - 1e-3;

/// Stopping rule for the hypergeometric series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    /// A term counts as negligible once |term| ≤ rel_tol·(1 − |x|)·|sum|.
    pub rel_tol: f64,
    /// Number of consecutive negligible terms required to stop.
    pub quiet_terms: usize,
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            rel_tol: 1e-15,
            quiet_terms: 3,
            max_terms: 100_000,
        }
    }
}

/// Parameters (a, b; c) of a Gauss hypergeometric series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperParams2F1 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HyperParams2F1 {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if is_pole(c) || !a.is_finite() || !b.is_finite() {
            return Err(Error::Domain {
                what: "2F1 parameters",
                value: c,
            });
        }
        Ok(Self { a, b, c })
    }

    fn is_quarter_three_quarter(&self) -> bool {
        self.c == 1.0 && ((self.a == 0.25 && self.b == 0.75) || (self.a == 0.75 && self.b == 0.25))
    }
}

fn is_pole(c: f64) -> bool {
    !c.is_finite() || (c <= 0.0 && libm::floor(c) == c)
}

/// Σ_k Π(numer)_k / (Π(denom)_k · k!) · x^k.
fn sum_series(
    numer: &[f64],
    denom: &[f64],
    x: f64,
    ctl: &SeriesControl,
    what: &'static str,
) -> Result<f64> {
    let threshold = ctl.rel_tol * (1.0 - math::abs(x));
    let mut acc = CompensatedSum::new();
    acc.add(1.0);
    let mut term = 1.0;
    let mut quiet = 0;
    for k in 0..ctl.max_terms {
        let kf = k as f64;
        let mut ratio = x / (kf + 1.0);
        for &p in numer {
            ratio *= p + kf;
        }
        for &q in denom {
            ratio /= q + kf;
        }
        term *= ratio;
        acc.add(term);
        if math::abs(term) <= threshold * math::abs(acc.value()) {
            quiet += 1;
            if quiet >= ctl.quiet_terms {
                return Ok(acc.value());
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NoConvergence {
        what,
        iterations: ctl.max_terms,
        last_change: term,
    })
}

/// ₂F₁(a, b; c; x) by its defining series, |x| < 1.
pub fn gauss_2f1(p: &HyperParams2F1, x: f64) -> Result<f64> {
    gauss_2f1_with(p, x, &SeriesControl::default())
}

pub fn gauss_2f1_with(p: &HyperParams2F1, x: f64, ctl: &SeriesControl) -> Result<f64> {
    if !(math::abs(x) < 1.0) {
        return Err(Error::Domain {
            what: "2F1 series argument",
            value: x,
        });
    }
    sum_series(&[p.a, p.b], &[p.c], x, ctl, "2F1 series")
}

/// ₂F₁(a, b; c; x) for x ≤ 0 of any magnitude, via the Pfaff transformation.
///
/// For the (¼, ¾; 1) parameters with transformed argument above
/// [`DEEP_ARGUMENT`] the value is taken from the periodic integral
/// (1/2π)∫ (1 − i·a·cos θ)^(−1/2) dθ with a = √(−x) instead, where the
/// transformed series would need hundreds of thousands of terms.
pub fn gauss_2f1_neg(p: &HyperParams2F1, x: f64) -> Result<f64> {
    if !(x <= 0.0) || x == f64::NEG_INFINITY {
        return Err(Error::Domain {
            what: "2F1 negative-argument route",
            value: x,
        });
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    let y = x / (x - 1.0);
    if y > DEEP_ARGUMENT && p.is_quarter_three_quarter() {
        let mean = quad::elliptic_mean(math::sqrt(-x), -1.0, 1 << 22, 1e-15)?;
        return Ok(mean.value.re);
    }
    let pre = math::powf(1.0 - x, -p.a);
    let series = sum_series(
        &[p.a, p.c - p.b],
        &[p.c],
        y,
        &SeriesControl::default(),
        "2F1 Pfaff series",
    )?;
    Ok(pre * series)
}

/// ₃F₂(a1, a2, a3; b1, b2; x) by its defining series, |x| < 1.
pub fn hyper_3f2(a1: f64, a2: f64, a3: f64, b1: f64, b2: f64, x: f64) -> Result<f64> {
    if is_pole(b1) || is_pole(b2) {
        return Err(Error::Domain {
            what: "3F2 lower parameters",
            value: if is_pole(b1) { b1 } else { b2 },
        });
    }
    if !(math::abs(x) < 1.0) {
        return Err(Error::Domain {
            what: "3F2 series argument",
            value: x,
        });
    }
    sum_series(
        &[a1, a2, a3],
        &[b1, b2],
        x,
        &SeriesControl::default(),
        "3F2 series",
    )
}

/// Complete elliptic integral of the first kind in terms of the squared
/// modulus, K = ∫₀^{π/2} dθ / √(1 − k² sin²θ), by the arithmetic–geometric
/// mean. Negative k² is allowed.
pub fn elliptic_k(k2: f64) -> Result<f64> {
    if !(k2 < 1.0) || k2.is_nan() || k2 == f64::NEG_INFINITY {
        return Err(Error::Domain {
            what: "elliptic K squared modulus",
            value: k2,
        });
    }
    let mut a = 1.0;
    let mut b = math::sqrt(1.0 - k2);
    for _ in 0..64 {
        if math::abs(a - b) <= 2.0 * f64::EPSILON * a {
            break;
        }
        let mid = 0.5 * (a + b);
        b = math::sqrt(a * b);
        a = mid;
    }
    Ok(FRAC_PI_2 / (0.5 * (a + b)))
}
