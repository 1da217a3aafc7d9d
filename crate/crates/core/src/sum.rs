/// Neumaier's variant of Kahan summation.
///
/// Carries the rounding error of every addition in a separate compensation
/// term, so the result is as if accumulated in roughly twice the working
/// precision (until the compensation itself loses bits).
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if crate::math::abs(self.sum) >= crate::math::abs(x) {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl core::iter::FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}


/// Unevaluated sum hi + lo carrying about 106 bits of significand.
///
/// Only the operations the Heun recurrence needs are provided.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub(crate) struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> DoubleDouble {
    let s = a + b;
    DoubleDouble {
        hi: s,
        lo: b - (s - a),
    }
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, libm::fma(a, b, -p))
}

impl DoubleDouble {
    pub fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn mul_f64(self, c: f64) -> Self {
        let (p, e) = two_prod(self.hi, c);
        quick_two_sum(p, e + self.lo * c)
    }

    pub fn sub(self, other: Self) -> Self {
        let (s, e) = two_sum(self.hi, -other.hi);
        quick_two_sum(s, e + (self.lo - other.lo))
    }

    pub fn div_f64(self, c: f64) -> Self {
        let q = self.hi / c;
        let (p, e) = two_prod(q, c);
        let r = ((self.hi - p) - e + self.lo) / c;
        quick_two_sum(q, r)
    }
}
