use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Real symmetric tridiagonal matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymTriMatrix {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl SymTriMatrix {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Construction("empty matrix".into()));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::Construction(format!(
                "{} diagonal entries need {} off-diagonal ones, got {}",
                diag.len(),
                diag.len() - 1,
                offdiag.len()
            )));
        }
        if diag.iter().chain(&offdiag).any(|v| !v.is_finite()) {
            return Err(Error::Construction("non-finite matrix entry".into()));
        }
        Ok(SymTriMatrix { diag, offdiag })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 {
                self.offdiag[i - 1].abs()
            } else {
                0.0
            } + if i + 1 < n {
                self.offdiag[i].abs()
            } else {
                0.0
            };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// Largest absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        let n = self.dim();
        (0..n)
            .map(|i| {
                self.diag[i].abs()
                    + if i > 0 {
                        self.offdiag[i - 1].abs()
                    } else {
                        0.0
                    }
                    + if i + 1 < n {
                        self.offdiag[i].abs()
                    } else {
                        0.0
                    }
            })
            .fold(0.0, f64::max)
    }

    /// Number of eigenvalues strictly below `shift` (negative pivots of the
    /// LDL^T factorization of `T - shift`).
    pub fn sturm_count(&self, shift: f64) -> usize {
        let max_e2 = self.offdiag.iter().map(|e| e * e).fold(1.0, f64::max);
        let pivmin = f64::MIN_POSITIVE * max_e2;
        let mut count = 0;
        let mut q = self.diag[0] - shift;
        for i in 0..self.dim() {
            if i > 0 {
                let e = self.offdiag[i - 1];
                q = self.diag[i] - shift - e * e / q;
            }
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `k` smallest eigenvalues, ascending, each bisected until its
    /// bracket cannot shrink further in floating point.
    pub fn eigenvalues_lowest(&self, k: usize) -> Result<Vec<f64>> {
        if k > self.dim() {
            return Err(Error::ParameterDomain(format!(
                "requested {k} eigenvalues of a {}x{} matrix",
                self.dim(),
                self.dim()
            )));
        }
        let (glo, ghi) = self.gershgorin();
        let pad = f64::EPSILON * (glo.abs().max(ghi.abs()) + 1.0) * 4.0;
        let (glo, ghi) = (glo - pad, ghi + pad);
        let mut out = Vec::with_capacity(k);
        let mut floor = glo;
        for i in 0..k {
            let v = self.bisect(i, floor, ghi);
            out.push(v);
            floor = floor.max(v - pad);
        }
        Ok(out)
    }

    /// All eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.eigenvalues_lowest(self.dim())
            .expect("dimension is a valid count")
    }

    // i-th eigenvalue (0-based) inside [lo, hi]
    fn bisect(&self, i: usize, mut lo: f64, mut hi: f64) -> f64 {
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                return mid;
            }
            if self.sturm_count(mid) > i {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
}
