//! Banded LU with partial pivoting, shared by the real and complex inverse iterations.

use std::ops::Neg;

use num_complex::Complex;
use num_traits::{Float, NumAssign, Zero};

use crate::scalar::Real;

/// Entry type for the banded solver: a real or complex field element.
pub(crate) trait Entry: Copy + NumAssign + Neg<Output = Self> + Send + Sync {
    type Base: Real;
    fn modulus(self) -> Self::Base;
    fn from_base(x: Self::Base) -> Self;
}

impl<T: Real> Entry for T {
    type Base = T;
    fn modulus(self) -> T {
        self.abs()
    }
    fn from_base(x: T) -> Self {
        x
    }
}

impl<T: Real> Entry for Complex<T> {
    type Base = T;
    fn modulus(self) -> T {
        self.norm()
    }
    fn from_base(x: T) -> Self {
        Complex::new(x, T::zero())
    }
}

/// Square band matrix with `kl` sub- and `ku` super-diagonals. Storage leaves
/// room for the `kl` extra super-diagonals created by row interchanges.
#[derive(Clone, Debug)]
pub(crate) struct BandMatrix<F> {
    n: usize,
    kl: usize,
    ku: usize,
    width: usize,
    rows: Vec<F>,
}

impl<F: Entry> BandMatrix<F> {
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Self {
        let width = 2 * kl + ku + 1;
        Self { n, kl, ku, width, rows: vec![F::zero(); n * width] }
    }

    #[inline]
    fn slot(&self, i: usize, j: usize) -> Option<usize> {
        if j + self.kl < i || j > i + self.ku + self.kl || j >= self.n {
            return None;
        }
        Some(i * self.width + (j + self.kl - i))
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.slot(i, j).map_or(F::zero(), |s| self.rows[s])
    }

    /// Sets an entry inside the declared band; panics outside it.
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        assert!(j + self.kl >= i && j <= i + self.ku, "({i}, {j}) outside band");
        let s = self.slot(i, j).expect("in band");
        self.rows[s] = v;
    }

    pub fn add(&mut self, i: usize, j: usize, v: F) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    pub fn max_modulus(&self) -> F::Base {
        self.rows.iter().fold(F::Base::zero(), |m, v| m.max(v.modulus()))
    }

    /// `y = A x` using the declared band.
    #[cfg(test)]
    pub fn apply(&self, x: &[F]) -> Vec<F> {
        (0..self.n)
            .map(|i| {
                let lo = i.saturating_sub(self.kl);
                let hi = (i + self.ku).min(self.n - 1);
                (lo..=hi).fold(F::zero(), |acc, j| acc + self.get(i, j) * x[j])
            })
            .collect()
    }

    /// In-place LU with partial pivoting. Exactly singular pivots are nudged
    /// to `eps·‖A‖` so that inverse iteration at an exact eigenvalue still works.
    pub fn factor(mut self) -> BandLu<F> {
        let n = self.n;
        let reach = self.ku + self.kl;
        let tiny = self.max_modulus().max(F::Base::min_positive_value()) * F::Base::epsilon();
        let mut pivots = Vec::with_capacity(n);
        for j in 0..n {
            let last = (j + self.kl).min(n - 1);
            let mut p = j;
            let mut best = self.get(j, j).modulus();
            for i in j + 1..=last {
                let m = self.get(i, j).modulus();
                if m > best {
                    best = m;
                    p = i;
                }
            }
            pivots.push(p);
            let cmax = (j + reach).min(n - 1);
            if p != j {
                for c in j..=cmax {
                    let a = self.get(j, c);
                    let b = self.get(p, c);
                    self.put(j, c, b);
                    self.put(p, c, a);
                }
            }
            if self.get(j, j).modulus() <= tiny {
                self.put(j, j, F::from_base(tiny));
            }
            let piv = self.get(j, j);
            for i in j + 1..=last {
                let l = self.get(i, j) / piv;
                self.put(i, j, l);
                if l.is_zero() {
                    continue;
                }
                for c in j + 1..=cmax {
                    let u = self.get(j, c);
                    if !u.is_zero() {
                        let v = self.get(i, c) - l * u;
                        self.put(i, c, v);
                    }
                }
            }
        }
        BandLu { a: self, pivots }
    }

    fn put(&mut self, i: usize, j: usize, v: F) {
        match self.slot(i, j) {
            Some(s) => self.rows[s] = v,
            None => debug_assert!(v.is_zero(), "fill outside LU band at ({i}, {j})"),
        }
    }
}

pub(crate) struct BandLu<F> {
    a: BandMatrix<F>,
    pivots: Vec<usize>,
}

impl<F: Entry> BandLu<F> {
    pub fn solve(&self, rhs: &[F]) -> Vec<F> {
        let a = &self.a;
        let n = a.n;
        let mut x = rhs.to_vec();
        for j in 0..n {
            let p = self.pivots[j];
            if p != j {
                x.swap(j, p);
            }
            let xj = x[j];
            for i in j + 1..=(j + a.kl).min(n - 1) {
                x[i] -= a.get(i, j) * xj;
            }
        }
        let reach = a.ku + a.kl;
        for j in (0..n).rev() {
            let mut s = x[j];
            for c in j + 1..=(j + reach).min(n - 1) {
                s -= a.get(j, c) * x[c];
            }
            x[j] = s / a.get(j, j);
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_pentadiagonal_with_pivoting() {
        let n = 7;
        let mut m = BandMatrix::<f64>::zeros(n, 1, 3);
        for i in 0..n {
            for j in i.saturating_sub(1)..=(i + 3).min(n - 1) {
                // Small diagonal forces row swaps.
                let v = if i == j { 1e-3 } else { 1.0 + (i * 7 + j * 3) as f64 * 0.1 };
                m.set(i, j, v);
            }
        }
        let x: Vec<f64> = (0..n).map(|i| (i as f64) - 2.5).collect();
        let b = m.apply(&x);
        let sol = m.factor().solve(&b);
        for (s, e) in sol.iter().zip(&x) {
            assert!((s - e).abs() < 1e-10, "{s} vs {e}");
        }
    }

    #[test]
    fn complex_tridiagonal_solve() {
        let n = 5;
        let mut m = BandMatrix::<Complex<f64>>::zeros(n, 1, 1);
        for i in 0..n {
            m.set(i, i, Complex::new(2.0, 1.0));
            if i > 0 {
                m.set(i, i - 1, Complex::new(0.0, -1.0));
            }
            if i + 1 < n {
                m.set(i, i + 1, Complex::new(1.0, 0.5));
            }
        }
        let x: Vec<_> = (0..n).map(|i| Complex::new(i as f64, 1.0)).collect();
        let b = m.apply(&x);
        let sol = m.factor().solve(&b);
        for (s, e) in sol.iter().zip(&x) {
            assert!((s - e).norm() < 1e-12);
        }
    }
}
