//! Symmetric tridiagonal eigenvalues by Sturm-count bisection, eigenvectors
//! by inverse iteration.

use crate::error::{Error, Result};

/// Symmetric tridiagonal matrix: `diag` has length n, `off` has length n − 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiag {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::Argument(format!(
                "tridiagonal shape mismatch: diag {} off {}",
                diag.len(),
                off.len()
            )));
        }
        Ok(Self { diag, off })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = self.diag[0] - x;
        if q < 0.0 {
            count += 1;
        }
        for i in 1..self.diag.len() {
            let prev = if q == 0.0 {
                f64::EPSILON * (self.off[i - 1].abs() + 1.0)
            } else {
                q
            };
            q = self.diag[i] - x - self.off[i - 1] * self.off[i - 1] / prev;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// The `index`-th eigenvalue (0-based, ascending).
    pub fn eigenvalue(&self, index: usize) -> Result<f64> {
        if index >= self.len() {
            return Err(Error::Argument(format!(
                "eigenvalue {index} of a {}×{} matrix",
                self.len(),
                self.len()
            )));
        }
        let (mut lo, mut hi) = self.gershgorin();
        let scale = lo.abs().max(hi.abs()).max(1.0);
        while hi - lo > 4.0 * f64::EPSILON * scale {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// The `k` lowest eigenvalues, ascending.
    pub fn lowest(&self, k: usize) -> Result<Vec<f64>> {
        if k > self.len() {
            return Err(Error::Argument(format!("k = {k} exceeds dimension {}", self.len())));
        }
        (0..k).map(|i| self.eigenvalue(i)).collect()
    }

    /// Solve (T − shift·I)x = b by the Thomas algorithm.
    fn solve_shifted(&self, shift: f64, b: &[f64]) -> Vec<f64> {
        let n = self.len();
        let tiny = f64::EPSILON * self.gershgorin().1.abs().max(1.0);
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let mut denom = self.diag[0] - shift;
        if denom.abs() < tiny {
            denom = tiny;
        }
        if n > 1 {
            c[0] = self.off[0] / denom;
        }
        d[0] = b[0] / denom;
        for i in 1..n {
            denom = self.diag[i] - shift - self.off[i - 1] * c[i - 1];
            if denom.abs() < tiny {
                denom = tiny;
            }
            if i + 1 < n {
                c[i] = self.off[i] / denom;
            }
            d[i] = (b[i] - self.off[i - 1] * d[i - 1]) / denom;
        }
        for i in (0..n - 1).rev() {
            d[i] -= c[i] * d[i + 1];
        }
        d
    }

    /// Unit eigenvector for the eigenvalue `lambda`.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.len();
        let scale = lambda.abs().max(1.0);
        let shift = lambda + 1e-10 * scale;
        let mut x: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * ((i * 7919) % 13) as f64).collect();
        for _ in 0..4 {
            x = self.solve_shifted(shift, &x);
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            x.iter_mut().for_each(|v| *v /= norm);
        }
        x
    }
}

/// Sign changes in a sampled function, ignoring values below `floor`.
pub fn count_nodes(values: &[f64], floor: f64) -> usize {
    let mut last = 0.0f64;
    let mut nodes = 0;
    for &v in values {
        if v.abs() <= floor {
            continue;
        }
        if last != 0.0 && last.signum() != v.signum() {
            nodes += 1;
        }
        last = v;
    }
    nodes
}
