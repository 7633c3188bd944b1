//! Sturm-sequence bisection for symmetric tridiagonal matrices.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Symmetric tridiagonal data in the form the Sturm recurrence consumes.
#[derive(Clone, Debug)]
pub(crate) struct SturmMatrix<T> {
    pub diag: Vec<T>,
    pub offdiag_sq: Vec<T>,
    pivmin: T,
}

impl<T: Real> SturmMatrix<T> {
    pub fn new(diag: Vec<T>, offdiag_sq: Vec<T>) -> Self {
        let emax = offdiag_sq.iter().fold(T::one(), |m, e| m.max(*e));
        Self { diag, offdiag_sq, pivmin: T::min_positive_value() * emax }
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `x` (negative pivots of `LDLᵀ` of `T − xI`).
    pub fn count_below(&self, x: T) -> usize {
        let mut q = self.diag[0] - x;
        if q.abs() < self.pivmin {
            q = -self.pivmin;
        }
        let mut count = usize::from(q < T::zero());
        for i in 1..self.diag.len() {
            q = self.diag[i] - x - self.offdiag_sq[i - 1] / q;
            if q.abs() < self.pivmin {
                q = -self.pivmin;
            }
            if q < T::zero() {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval, widened to absorb rounding in the counts.
    pub fn gershgorin(&self) -> (T, T) {
        let n = self.order();
        let e: Vec<T> = self.offdiag_sq.iter().map(|v| v.sqrt()).collect();
        let (mut lo, mut hi) = (T::infinity(), T::neg_infinity());
        for i in 0..n {
            let r = if i > 0 { e[i - 1] } else { T::zero() } + if i + 1 < n { e[i] } else { T::zero() };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        let norm = lo.abs().max(hi.abs());
        let pad = T::c(2.0) * T::epsilon() * norm * T::from_count(n) + T::c(2.0) * self.pivmin;
        (lo - pad, hi + pad)
    }
}

/// Eigenvalues by bisection, each with a bracket `[lo, hi]` such that at most
/// `i` eigenvalues lie below `lo` and at least `i + 1` lie below `hi`.
#[derive(Clone, Debug)]
pub(crate) struct Bisection<T> {
    pub values: Vec<T>,
    pub brackets: Vec<(T, T)>,
}

pub(crate) fn bisect_all<T: Real>(m: &SturmMatrix<T>, tol: T) -> Result<Bisection<T>> {
    let n = m.order();
    let (gl, gu) = m.gershgorin();
    if !(gl.is_finite() && gu.is_finite()) {
        return Err(Error::NonConvergence { expected: n, found: 0 });
    }
    let (c_lo, c_hi) = (m.count_below(gl), m.count_below(gu));
    if c_lo != 0 || c_hi != n {
        return Err(Error::NonConvergence { expected: n, found: c_hi.saturating_sub(c_lo) });
    }
    let tol = tol.max(T::c(4.0) * T::epsilon() * gl.abs().max(gu.abs()));
    let one = |i: usize| bisect_index(m, i, gl, gu, tol);
    let brackets: Vec<(T, T)> =
        if n >= 64 { (0..n).into_par_iter().with_min_len(16).map(one).collect() } else { (0..n).map(one).collect() };
    let values = brackets.iter().map(|&(lo, hi)| lo + (hi - lo) / T::c(2.0)).collect();
    Ok(Bisection { values, brackets })
}

fn bisect_index<T: Real>(m: &SturmMatrix<T>, i: usize, mut lo: T, mut hi: T, tol: T) -> (T, T) {
    let two = T::c(2.0);
    while hi - lo > tol {
        let mid = lo + (hi - lo) / two;
        if mid <= lo || mid >= hi {
            break;
        }
        if m.count_below(mid) > i {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_on_diagonal_matrix() {
        let m = SturmMatrix::new(vec![1.0, 2.0, 3.0], vec![0.0, 0.0]);
        assert_eq!(m.count_below(0.5), 0);
        assert_eq!(m.count_below(2.5), 2);
        assert_eq!(m.count_below(9.0), 3);
    }

    #[test]
    fn discrete_laplacian_spectrum() {
        // 2 − 2cos(jπ/(n+1)), j = 1..n
        let n = 40;
        let m = SturmMatrix::new(vec![2.0; n], vec![1.0; n - 1]);
        let b = bisect_all(&m, 1e-14).unwrap();
        for (j, v) in b.values.iter().enumerate() {
            let exact = 2.0 - 2.0 * (((j + 1) as f64) * std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert!((v - exact).abs() < 1e-13);
            let (lo, hi) = b.brackets[j];
            assert!(lo <= exact + 1e-15 && exact - 1e-15 <= hi);
        }
    }

    #[test]
    fn nan_input_is_non_convergence() {
        let m = SturmMatrix::new(vec![f64::NAN, 1.0], vec![1.0]);
        assert!(matches!(bisect_all(&m, 1e-12), Err(Error::NonConvergence { .. })));
    }
}
