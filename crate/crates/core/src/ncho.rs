//! Operator parameters and ζ_Q(2) by the analytic routes.
//!
//! With γ = 1/√(αβ) and a = γ/√(1 − γ²) = 1/√(αβ − 1),
//!
//! ```text
//! ζ_Q(2) = (π²/4)·(α⁻¹ + β⁻¹)²/(1 − α⁻¹β⁻¹) · (1 + ((α⁻¹ − β⁻¹)/(α⁻¹ + β⁻¹))²·g(a))
//! g(a)   = ₂F₁(¼, ¾; 1; −a²)²
//!        = 2 Σₙ (−1)ⁿ cₙ a²ⁿ Jₙ/J₀                    (a < 1)
//!        = (1/π) ∫₀¹ w(−a²u)/J₀ · du/√(u(1 − u))
//!        = [(1/2π) ∫₀^{2π} (1 + i·a·cos θ)^(−1/2) dθ]²
//! ```
//!
//! where cₙ = C(2n, n)/(2·4ⁿ), with c₀ = ½.

use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::heun::{self, HeunCoefficients, J0};
use crate::hypergeom::{self, HyperParams2F1};
use crate::math;
use crate::quad;
use crate::sum::CompensatedSum;

/// Scaling constants α, β of the two oscillators. Always satisfies
/// α > 0, β > 0, αβ > 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NchoParams {
    alpha: f64,
    beta: f64,
}

impl NchoParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        let ok = alpha > 0.0
            && beta > 0.0
            && alpha.is_finite()
            && beta.is_finite()
            && alpha * beta > 1.0;
        if ok {
            Ok(Self { alpha, beta })
        } else {
            Err(Error::InvalidParams { alpha, beta })
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn derive(&self) -> DerivedParams {
        let ab = self.alpha * self.beta;
        DerivedParams {
            gamma: 1.0 / math::sqrt(ab),
            a: 1.0 / math::sqrt(ab - 1.0),
        }
    }

    /// (α⁻¹ + β⁻¹)² / (1 − γ²)
    fn sum_weight(&self) -> f64 {
        let s = 1.0 / self.alpha + 1.0 / self.beta;
        s * s / self.one_minus_gamma2()
    }

    /// (α⁻¹ − β⁻¹)² / (1 − γ²)
    fn diff_weight(&self) -> f64 {
        let d = 1.0 / self.alpha - 1.0 / self.beta;
        d * d / self.one_minus_gamma2()
    }

    fn one_minus_gamma2(&self) -> f64 {
        1.0 - 1.0 / (self.alpha * self.beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    /// 1/√(αβ) ∈ (0, 1)
    pub gamma: f64,
    /// 1/√(αβ − 1) > 0
    pub a: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Closed,
    Series,
    Elliptic,
    Euler,
    Spectral,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Closed,
        Method::Series,
        Method::Elliptic,
        Method::Euler,
        Method::Spectral,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Series => "series",
            Method::Elliptic => "elliptic",
            Method::Euler => "euler",
            Method::Spectral => "spectral",
        }
    }
}

impl core::fmt::Display for Method {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or(Error::Domain {
                what: "unknown method tag",
                value: f64::NAN,
            })
    }
}

/// A value of ζ_Q(2) together with how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaResult {
    pub value: f64,
    pub method: Method,
    pub terms_or_nodes: usize,
    pub err_estimate: f64,
}

/// cₙ = C(2n − 1, n)/4ⁿ = ½·(2n − 1)!!/(2n)!!, with c₀ = ½.
pub fn series_coeff(n: usize) -> f64 {
    (0..n).fold(0.5, |c, k| c * (2 * k + 1) as f64 / (2 * k + 2) as f64)
}

/// A g(a) value with bookkeeping for the ζ routes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GValue {
    pub value: f64,
    pub terms_or_nodes: usize,
    pub err_estimate: f64,
}

const SERIES_TERM_FLOOR: f64 = 1e-15;

fn check_a(a: f64) -> Result<()> {
    if a >= 0.0 && a.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "g(a) needs a >= 0",
            value: a,
        })
    }
}

/// g(a) from the Heun-coefficient series, 0 ≤ a < 1.
pub fn g_series(a: f64, n_max: usize) -> Result<f64> {
    g_series_detail(a, n_max).map(|g| g.value)
}

pub fn g_series_detail(a: f64, n_max: usize) -> Result<GValue> {
    if !(0.0..1.0).contains(&a) {
        return Err(Error::Domain {
            what: "g series needs 0 <= a < 1",
            value: a,
        });
    }
    let a2 = a * a;
    let mut acc = CompensatedSum::new();
    let mut c = 0.5;
    let mut power = 1.0;
    let mut last = 0.0;
    let mut used = 0;
    for (n, j) in HeunCoefficients::new().take(n_max + 1).enumerate() {
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        let term = 2.0 * sign * c * power * j / J0;
        acc.add(term);
        last = term;
        used = n + 1;
        if math::abs(term) < SERIES_TERM_FLOOR {
            break;
        }
        c *= (2 * n + 1) as f64 / (2 * n + 2) as f64;
        power *= a2;
    }
    Ok(GValue {
        value: acc.value(),
        terms_or_nodes: used,
        err_estimate: math::abs(last),
    })
}

/// g(a) = ₂F₁(¼, ¾; 1; −a²)².
pub fn g_closed(a: f64) -> Result<f64> {
    check_a(a)?;
    let f = hypergeom::gauss_2f1_neg(
        &HyperParams2F1 {
            a: 0.25,
            b: 0.75,
            c: 1.0,
        },
        -a * a,
    )?;
    Ok(f * f)
}

/// g(a) = (1/π) ∫₀¹ w(−a²u)/J₀ · du/√(u(1 − u)).
pub fn g_euler(a: f64) -> Result<f64> {
    g_euler_detail(a, quad::DEFAULT_N_MAX, quad::DEFAULT_TOL).map(|g| g.value)
}

pub fn g_euler_detail(a: f64, n_max: usize, tol: f64) -> Result<GValue> {
    check_a(a)?;
    let a2 = a * a;
    // w_closed only fails for z ≥ ½, and here z = −a²u ≤ 0.
    let r = quad::beta_weighted(
        |u| heun::w_closed(-a2 * u).unwrap_or(f64::NAN) / J0,
        n_max,
        tol * PI,
    )?;
    if !r.value.re.is_finite() {
        return Err(Error::Domain {
            what: "euler integrand",
            value: a,
        });
    }
    Ok(GValue {
        value: r.value.re / PI,
        terms_or_nodes: r.nodes,
        err_estimate: r.err_estimate / PI,
    })
}

/// g(a) = [(1/2π) ∫ (1 − i·a·cos θ)^(−1/2) dθ]², checked against the
/// conjugate branch.
pub fn g_elliptic(a: f64) -> Result<f64> {
    g_elliptic_detail(a, quad::DEFAULT_N_MAX, quad::DEFAULT_TOL).map(|g| g.value)
}

pub fn g_elliptic_detail(a: f64, n_max: usize, tol: f64) -> Result<GValue> {
    check_a(a)?;
    // √(1 − αβ) = +i√(αβ − 1), so 1/√(1 − αβ) = −i·a.
    let minus = quad::elliptic_mean(a, -1.0, n_max, tol)?;
    let plus = quad::elliptic_mean(a, 1.0, n_max, tol)?;
    let slack = 10.0 * tol;
    if math::abs(minus.value.im) >= slack
        || math::abs(plus.value.im) >= slack
        || math::abs(minus.value.re - plus.value.re) >= slack
    {
        return Err(Error::BranchInconsistency {
            plus: plus.value.re,
            minus: minus.value.re,
        });
    }
    let f = minus.value.re;
    Ok(GValue {
        value: f * f,
        terms_or_nodes: minus.nodes,
        err_estimate: 2.0 * math::abs(f) * minus.err_estimate,
    })
}

/// Z₁(2) = (α⁻¹ + β⁻¹)²/(2(1 − γ²)) · 3ζ(2).
pub fn z1(p: &NchoParams) -> f64 {
    0.5 * p.sum_weight() * J0
}

/// Z′ₙ(2) = (−1)ⁿ (α⁻¹ − β⁻¹)²/(1 − γ²) · cₙ a²ⁿ Jₙ.
pub fn zprime(p: &NchoParams, n: usize) -> f64 {
    let a2 = p.derive().a * p.derive().a;
    let j = HeunCoefficients::new().nth(n).unwrap_or(f64::NAN);
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * p.diff_weight() * series_coeff(n) * math::powf(a2, n as f64) * j
}

/// Z₁ + (prefactor)·g, i.e. (π²/4)(α⁻¹+β⁻¹)²/(1−α⁻¹β⁻¹)·(1 + ratio²·g).
fn zeta_from_g(p: &NchoParams, g: f64) -> f64 {
    0.5 * J0 * (p.sum_weight() + p.diff_weight() * g)
}

fn from_g(p: &NchoParams, g: GValue, method: Method) -> ZetaResult {
    ZetaResult {
        value: zeta_from_g(p, g.value),
        method,
        terms_or_nodes: g.terms_or_nodes,
        err_estimate: 0.5 * J0 * p.diff_weight() * g.err_estimate,
    }
}

/// ζ_Q(2) = Z₁(2) + Σ Z′ₙ(2), available for a < 1 (αβ > 2).
pub fn zeta2_series(p: &NchoParams, n_max: usize) -> Result<ZetaResult> {
    let a = p.derive().a;
    if a >= 1.0 {
        return Err(Error::Domain {
            what: "zeta series needs alpha*beta > 2",
            value: p.alpha * p.beta,
        });
    }
    let weight = p.diff_weight();
    let mut acc = CompensatedSum::new();
    acc.add(z1(p));
    let (mut c, mut power, mut last, mut used) = (0.5, 1.0, 0.0, 0);
    for (n, j) in HeunCoefficients::new().take(n_max + 1).enumerate() {
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        let term = sign * weight * c * power * j;
        acc.add(term);
        last = term;
        used = n + 1;
        if math::abs(term) < SERIES_TERM_FLOOR * math::abs(acc.value()) {
            break;
        }
        c *= (2 * n + 1) as f64 / (2 * n + 2) as f64;
        power *= a * a;
    }
    Ok(ZetaResult {
        value: acc.value(),
        method: Method::Series,
        terms_or_nodes: used,
        err_estimate: math::abs(last),
    })
}

pub fn zeta2_closed(p: &NchoParams) -> Result<ZetaResult> {
    let g = g_closed(p.derive().a)?;
    Ok(ZetaResult {
        value: zeta_from_g(p, g),
        method: Method::Closed,
        terms_or_nodes: 0,
        err_estimate: 4.0 * f64::EPSILON * zeta_from_g(p, g),
    })
}

pub fn zeta2_elliptic(p: &NchoParams) -> Result<ZetaResult> {
    zeta2_elliptic_with(p, quad::DEFAULT_N_MAX, quad::DEFAULT_TOL)
}

pub fn zeta2_elliptic_with(p: &NchoParams, n_max: usize, tol: f64) -> Result<ZetaResult> {
    let g = g_elliptic_detail(p.derive().a, n_max, tol)?;
    Ok(from_g(p, g, Method::Elliptic))
}

pub fn zeta2_euler(p: &NchoParams) -> Result<ZetaResult> {
    zeta2_euler_with(p, quad::DEFAULT_N_MAX, quad::DEFAULT_TOL)
}

pub fn zeta2_euler_with(p: &NchoParams, n_max: usize, tol: f64) -> Result<ZetaResult> {
    let g = g_euler_detail(p.derive().a, n_max, tol)?;
    Ok(from_g(p, g, Method::Euler))
}
