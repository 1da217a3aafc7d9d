//! Brute-force ζ_Q(2) from the eigenvalues of a Galerkin truncation of Q.
//!
//! In the orthonormal Hermite functions ψₙ the oscillator part is diagonal,
//! (−∂ₓ²/2 + x²/2)ψₙ = (n + ½)ψₙ, and with the ladder operators
//! x∂ₓ + ½ = (a² − a†²)/2, whose only matrix elements are
//!
//! ```text
//! ⟨ψ_{n−2}| x∂ₓ + ½ |ψₙ⟩ =  √(n(n − 1))/2
//! ⟨ψₙ| x∂ₓ + ½ |ψ_{n−2}⟩ = −√(n(n − 1))/2
//! ```
//!
//! The skew factor [[0, −1], [1, 0]] turns this skew-symmetric block into a
//! real symmetric matrix. Coupling only links modes n and n ± 2, so even and
//! odd modes decouple; ordering each parity block as (u₁ₙ, u₂ₙ) pairs makes
//! it a band matrix of half-bandwidth 3.

mod eigen;

use alloc::vec::Vec;

pub use eigen::{tridiagonal_ql, SymBand};

use crate::error::{Error, Result};
use crate::math;
use crate::ncho::{Method, NchoParams, ZetaResult};
use crate::sum::CompensatedSum;

pub const DEFAULT_BASIS: usize = 512;
pub const DEFAULT_KEEP: usize = 200;
/// Relative change under halving of the basis below which an eigenvalue is
/// flagged as converged.
pub const STABLE_RTOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn offset(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Galerkin matrix of Q on ψ₀..ψ_{n_modes−1} in each component.
///
/// Full index i < n_modes is (u₁, ψᵢ); i ≥ n_modes is (u₂, ψ_{i−n_modes}).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GalerkinMatrix {
    alpha: f64,
    beta: f64,
    n_modes: usize,
}

/// ⟨ψ_m| x∂ₓ + ½ |ψ_n⟩
fn dilation(m: usize, n: usize) -> f64 {
    if m + 2 == n {
        0.5 * math::sqrt((n * (n - 1)) as f64)
    } else if n + 2 == m {
        -0.5 * math::sqrt((m * (m - 1)) as f64)
    } else {
        0.0
    }
}

impl GalerkinMatrix {
    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn size(&self) -> usize {
        2 * self.n_modes
    }

    fn split(&self, i: usize) -> (usize, usize) {
        (i / self.n_modes, i % self.n_modes)
    }

    /// Entry (i, j) of the full 2·n_modes matrix.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        let (ci, m) = self.split(i);
        let (cj, n) = self.split(j);
        match (ci, cj) {
            (0, 0) if m == n => self.alpha * (n as f64 + 0.5),
            (1, 1) if m == n => self.beta * (n as f64 + 0.5),
            (0, 1) => -dilation(m, n),
            (1, 0) => dilation(m, n),
            _ => 0.0,
        }
    }

    /// Full dense matrix, row-major. Meant for small sizes.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Full-matrix indices of a parity block in block order
    /// (u₁ψ_p, u₂ψ_p, u₁ψ_{p+2}, u₂ψ_{p+2}, …).
    pub fn parity_indices(&self, parity: Parity) -> Vec<usize> {
        (parity.offset()..self.n_modes)
            .step_by(2)
            .flat_map(|n| [n, self.n_modes + n])
            .collect()
    }

    pub fn parity_block(&self, parity: Parity) -> SymBand {
        let idx = self.parity_indices(parity);
        let mut band = SymBand::zeros(idx.len(), 3);
        for (r, &i) in idx.iter().enumerate() {
            for c in r.saturating_sub(3)..=r {
                band.set(r, c, self.get(i, idx[c]));
            }
        }
        band
    }
}

pub fn build_matrix(p: &NchoParams, n_modes: usize) -> Result<GalerkinMatrix> {
    if n_modes < 4 {
        return Err(Error::Domain {
            what: "Hermite basis needs at least 4 modes",
            value: n_modes as f64,
        });
    }
    Ok(GalerkinMatrix {
        alpha: p.alpha(),
        beta: p.beta(),
        n_modes,
    })
}

/// Ascending eigenvalues of one parity block.
pub fn parity_eigenvalues(p: &NchoParams, n_modes: usize, parity: Parity) -> Result<Vec<f64>> {
    build_matrix(p, n_modes)?.parity_block(parity).eigenvalues()
}

fn merge_sorted(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] <= b[j]) {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out
}

fn all_eigenvalues(p: &NchoParams, n_modes: usize) -> Result<Vec<f64>> {
    let even = parity_eigenvalues(p, n_modes, Parity::Even)?;
    let odd = parity_eigenvalues(p, n_modes, Parity::Odd)?;
    Ok(merge_sorted(&even, &odd))
}

/// Lowest eigenvalues with a per-eigenvalue convergence flag.
#[derive(Debug, Clone, PartialEq)]
pub struct LowSpectrum {
    pub values: Vec<f64>,
    /// Whether the value moved by less than [`STABLE_RTOL`] (relative)
    /// against a basis of half the size.
    pub stable: Vec<bool>,
}

pub fn lowest_eigenvalues(p: &NchoParams, n_modes: usize, k: usize) -> Result<LowSpectrum> {
    if k > n_modes {
        return Err(Error::Domain {
            what: "requested more eigenvalues than modes per component",
            value: k as f64,
        });
    }
    let full = all_eigenvalues(p, n_modes)?;
    let half = all_eigenvalues(p, (n_modes / 2).max(4))?;
    let values: Vec<f64> = full[..k].to_vec();
    let stable = values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            half.get(i)
                .is_some_and(|h| math::abs(h - v) <= STABLE_RTOL * v)
        })
        .collect();
    Ok(LowSpectrum { values, stable })
}

/// Kept eigenvalues and the linear model used for the omitted tail.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralTruncation {
    pub basis_size: usize,
    /// Every eigenvalue below the cut, ascending.
    pub eigenvalues: Vec<f64>,
    pub tail_slope: f64,
    pub tail_intercept: f64,
    /// Root-mean-square residual of the tail fit.
    pub fit_rms: f64,
}

impl SpectralTruncation {
    /// Keeps the lowest `k_keep` eigenvalues of each parity block and cuts
    /// the merged list at the smaller of the two block maxima, so that no
    /// eigenvalue below the cut is missing. The tail model λₙ ≈ c·n + d is
    /// fitted over the last quarter of the merged list.
    pub fn compute(p: &NchoParams, n_modes: usize, k_keep: usize) -> Result<Self> {
        if k_keep > n_modes / 2 || k_keep < 8 {
            return Err(Error::Domain {
                what: "k_keep must lie in 8..=n_modes/2 per parity block",
                value: k_keep as f64,
            });
        }
        let even = parity_eigenvalues(p, n_modes, Parity::Even)?;
        let odd = parity_eigenvalues(p, n_modes, Parity::Odd)?;
        let (even, odd) = (&even[..k_keep], &odd[..k_keep]);
        let cut = even[k_keep - 1].min(odd[k_keep - 1]);
        let mut eigenvalues = merge_sorted(even, odd);
        eigenvalues.retain(|&v| v <= cut);

        let k = eigenvalues.len();
        let start = k - k / 4;
        let (slope, intercept, fit_rms) = fit_line(&eigenvalues, start);
        Ok(Self {
            basis_size: n_modes,
            eigenvalues,
            tail_slope: slope,
            tail_intercept: intercept,
            fit_rms,
        })
    }

    pub fn partial_sum(&self) -> f64 {
        self.eigenvalues
            .iter()
            .map(|v| 1.0 / (v * v))
            .collect::<CompensatedSum>()
            .value()
    }

    /// Σ_{n>K} (c·n + d)⁻² ≈ ∫_{K+½}^∞ (c·x + d)⁻² dx, with an error bound
    /// covering the midpoint approximation and the fit residual.
    pub fn tail(&self) -> (f64, f64) {
        let (c, d) = (self.tail_slope, self.tail_intercept);
        let lam = c * (self.eigenvalues.len() as f64 + 0.5) + d;
        let tail = 1.0 / (c * lam);
        let midpoint = 2.0 * c / (24.0 * lam * lam * lam);
        let fit = self.fit_rms / (c * lam * lam);
        (tail, midpoint + fit)
    }
}

/// Least-squares line through (n, values[n−1]) for n > start (1-based n).
fn fit_line(values: &[f64], start: usize) -> (f64, f64, f64) {
    let pts: Vec<(f64, f64)> = values[start..]
        .iter()
        .enumerate()
        .map(|(i, &v)| ((start + i + 1) as f64, v))
        .collect();
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let (sxx, sxy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| {
        (a + (x - mx) * (x - mx), b + (x - mx) * (y - my))
    });
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss: f64 = pts
        .iter()
        .map(|(x, y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum();
    (slope, intercept, math::sqrt(ss / m))
}

/// ζ_Q(2) ≈ Σ_{kept} λₙ⁻² + linear-model tail.
pub fn zeta2_spectral(p: &NchoParams, n_modes: usize, k_keep: usize) -> Result<ZetaResult> {
    let t = SpectralTruncation::compute(p, n_modes, k_keep)?;
    let (tail, tail_err) = t.tail();
    Ok(ZetaResult {
        value: t.partial_sum() + tail,
        method: Method::Spectral,
        terms_or_nodes: t.eigenvalues.len(),
        err_estimate: tail_err,
    })
}

/// Σ λₙ⁻² over the lowest `count` eigenvalues, no tail.
pub fn partial_zeta(p: &NchoParams, n_modes: usize, count: usize) -> Result<f64> {
    let low = lowest_eigenvalues(p, n_modes, count)?;
    Ok(low
        .values
        .iter()
        .map(|v| 1.0 / (v * v))
        .collect::<CompensatedSum>()
        .value())
}
