//! Eigenvalues of real symmetric band matrices.
//!
//! Band → tridiagonal by Givens rotations with bulge chasing, then the
//! implicit-shift QL iteration on the tridiagonal form. Cost is O(n²·b) for
//! the reduction and O(n²) for QL, so large Galerkin blocks stay cheap.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

const MAX_QL_SWEEPS: usize = 60;

/// Lower triangle of a symmetric band matrix, stored by column with room
/// for one extra diagonal (the bulge created during reduction).
#[derive(Debug, Clone, PartialEq)]
pub struct SymBand {
    n: usize,
    bandwidth: usize,
    stride: usize,
    data: Vec<f64>,
}

impl SymBand {
    pub fn zeros(n: usize, bandwidth: usize) -> Self {
        let stride = bandwidth + 2;
        Self {
            n,
            bandwidth,
            stride,
            data: vec![0.0; n * stride],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    #[inline]
    fn slot(&self, i: usize, j: usize) -> Option<usize> {
        let (r, c) = if i >= j { (i, j) } else { (j, i) };
        let d = r - c;
        (r < self.n && d < self.stride).then(|| c * self.stride + d)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.slot(i, j).map_or(0.0, |k| self.data[k])
    }

    /// Sets A[i][j] = A[j][i]. Panics if (i, j) lies outside the band.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        let d = i.abs_diff(j);
        assert!(
            d <= self.bandwidth,
            "({i}, {j}) outside bandwidth {}",
            self.bandwidth
        );
        let k = self.slot(i, j).expect("index within matrix");
        self.data[k] = v;
    }

    #[inline]
    fn put(&mut self, i: usize, j: usize, v: f64) {
        if let Some(k) = self.slot(i, j) {
            self.data[k] = v;
        }
    }

    /// A ← G A Gᵀ with G the rotation [[c, s], [−s, c]] in the (p, p+1) plane.
    fn rotate(&mut self, p: usize, c: f64, s: f64) {
        let q = p + 1;
        let reach = self.stride - 1;
        let lo = p.saturating_sub(reach);
        let hi = (q + reach).min(self.n - 1);
        for k in lo..=hi {
            if k == p || k == q {
                continue;
            }
            let x = self.get(p, k);
            let y = self.get(q, k);
            self.put(p, k, c * x + s * y);
            self.put(q, k, -s * x + c * y);
        }
        let (app, apq, aqq) = (self.get(p, p), self.get(p, q), self.get(q, q));
        let (cc, ss, cs) = (c * c, s * s, c * s);
        self.put(p, p, cc * app + 2.0 * cs * apq + ss * aqq);
        self.put(q, q, ss * app - 2.0 * cs * apq + cc * aqq);
        self.put(p, q, cs * (aqq - app) + (cc - ss) * apq);
    }

    /// Zero A[r][col] against A[r−1][col] with a rotation in plane (r−1, r).
    fn annihilate(&mut self, r: usize, col: usize) {
        let y = self.get(r, col);
        if y == 0.0 {
            return;
        }
        let x = self.get(r - 1, col);
        let h = math::hypot(x, y);
        self.rotate(r - 1, x / h, y / h);
        self.put(r, col, 0.0);
    }

    /// Reduce to tridiagonal form, returning (diagonal, subdiagonal).
    pub fn tridiagonalize(mut self) -> (Vec<f64>, Vec<f64>) {
        let (n, b) = (self.n, self.bandwidth);
        if b > 1 {
            for j in 0..n.saturating_sub(2) {
                for k in (2..=b).rev() {
                    let r = j + k;
                    if r >= n || self.get(r, j) == 0.0 {
                        continue;
                    }
                    self.annihilate(r, j);
                    // the rotation in plane (r−1, r) spills one element past
                    // the band at (r−1+b+1, r−1); chase it off the end
                    let mut col = r - 1;
                    while col + b + 1 < n {
                        let row = col + b + 1;
                        if self.get(row, col) == 0.0 {
                            break;
                        }
                        self.annihilate(row, col);
                        col = row - 1;
                    }
                }
            }
        }
        let diag = (0..n).map(|i| self.get(i, i)).collect();
        let sub = (0..n)
            .map(|i| if i + 1 < n { self.get(i + 1, i) } else { 0.0 })
            .collect();
        (diag, sub)
    }

    /// All eigenvalues, ascending.
    pub fn eigenvalues(self) -> Result<Vec<f64>> {
        let (mut d, mut e) = self.tridiagonalize();
        tridiagonal_ql(&mut d, &mut e)?;
        d.sort_by(|a, b| a.total_cmp(b));
        Ok(d)
    }
}

/// Implicit QL with Wilkinson-type shifts on a symmetric tridiagonal matrix.
///
/// `d` holds the diagonal and is overwritten with the (unsorted)
/// eigenvalues; `e[i]` couples i and i + 1 and is destroyed.
pub fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    assert_eq!(e.len(), n);
    if n == 0 {
        return Ok(());
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = math::abs(d[m]) + math::abs(d[m + 1]);
                if math::abs(e[m]) <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_QL_SWEEPS {
                return Err(Error::EigensolveFailure { index: l, sweeps });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = math::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + math::copysign(r, g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = math::hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
