//! Special value ζ_Q(2) of the spectral zeta function of the
//! non-commutative harmonic oscillator
//!
//! ```text
//! Q = diag(α, β)·(−∂ₓ²/2 + x²/2) + [[0, −1], [1, 0]]·(x∂ₓ + ½),   αβ > 1
//! ```
//!
//! The crate evaluates ζ_Q(2) = Σ λₙ⁻² through several independent routes:
//!
//! - [`ncho::zeta2_closed`]: hypergeometric closed form in ₂F₁(¼, ¾; 1; −a²)
//! - [`ncho::zeta2_elliptic`]: periodic integral of (1 − i·a·cos θ)^(−1/2)
//! - [`ncho::zeta2_euler`]: Euler-type integral of the generating function w(z)
//! - [`ncho::zeta2_series`]: the Heun-coefficient series (a < 1 only)
//! - [`spectral::zeta2_spectral`]: Hermite–Galerkin eigenvalues plus a tail fit
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod complex;
mod error;
mod math;
mod sum;

pub mod heun;
pub mod hypergeom;
pub mod ncho;
pub mod quad;
pub mod spectral;

pub use complex::{csqrt, ComplexValue};
pub use error::{Error, Result};
pub use ncho::{DerivedParams, Method, NchoParams, ZetaResult};
pub use sum::CompensatedSum;
