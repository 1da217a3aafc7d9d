use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::math;

/// A complex number in Cartesian form.
///
/// Only the handful of operations the elliptic integrand needs are provided.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl ComplexValue {
    pub const ZERO: ComplexValue = ComplexValue { re: 0.0, im: 0.0 };
    pub const ONE: ComplexValue = ComplexValue { re: 1.0, im: 0.0 };
    pub const I: ComplexValue = ComplexValue { re: 0.0, im: 1.0 };

    #[inline]
    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    #[inline]
    pub const fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    #[inline]
    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        math::hypot(self.re, self.im)
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Self::new(self.re * s, self.im * s)
    }

    /// 1/z, scaled to avoid overflow in the squared modulus.
    pub fn recip(self) -> Self {
        if math::abs(self.re) >= math::abs(self.im) {
            let r = self.im / self.re;
            let d = self.re + self.im * r;
            Self::new(1.0 / d, -r / d)
        } else {
            let r = self.re / self.im;
            let d = self.re * r + self.im;
            Self::new(r / d, -1.0 / d)
        }
    }

    #[inline]
    pub fn sqrt(self) -> Self {
        csqrt(self)
    }
}

/// Principal square root: the result has non-negative real part, and the
/// branch cut runs along the negative real axis.
pub fn csqrt(z: ComplexValue) -> ComplexValue {
    if z.re == 0.0 && z.im == 0.0 {
        return ComplexValue::new(0.0, z.im);
    }
    let t = math::sqrt(0.5 * (math::abs(z.re) + z.norm()));
    if z.re >= 0.0 {
        ComplexValue::new(t, z.im / (2.0 * t))
    } else {
        ComplexValue::new(math::abs(z.im) / (2.0 * t), math::copysign(t, z.im))
    }
}

impl Add for ComplexValue {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ComplexValue {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ComplexValue {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Div for ComplexValue {
    type Output = Self;
    #[inline]
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl Neg for ComplexValue {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl From<f64> for ComplexValue {
    fn from(re: f64) -> Self {
        Self::real(re)
    }
}
