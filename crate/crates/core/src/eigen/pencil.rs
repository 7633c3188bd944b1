//! Stieltjes polynomials in a Chebyshev basis on `[α₁, α₃]`.
//!
//! With `x = c + w t` the equation becomes `Ã S_tt + B̃ S_t − μ(t − τ) S = 0`,
//! where `Ã`, `B̃` are `A`, `B` built from the singular points mapped to `t`
//! and `τ = (ν − c)/w`. In the ultraspherical basis this is a banded pencil
//! `L s = −μτ N s`; the top `C^(2)` row vanishes identically at `μ = μ_k` and
//! is dropped, leaving a square `(k+1)×(k+1)` problem.

use crate::cheb::{ultra, ChebSeries};
use crate::linalg::{BandLu, BandMatrix};
use crate::problem::{mu, LameProblem};
use crate::scalar::Real;

pub(crate) struct ChebPencil<T> {
    n: usize,
    kl: usize,
    ku: usize,
    /// Sparse columns `(row, value)`.
    l_cols: Vec<Vec<(usize, T)>>,
    n_cols: Vec<Vec<(usize, T)>>,
    mu: T,
    lo: T,
    hi: T,
}

/// Monomial coefficients (ascending) of `Π (t − r_i)`.
fn poly_from_roots<T: Real>(roots: &[T]) -> Vec<T> {
    let mut p = vec![T::one()];
    for &r in roots {
        let mut next = vec![T::zero(); p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= r * c;
        }
        p = next;
    }
    p
}

impl<T: Real> ChebPencil<T> {
    pub fn new(problem: &LameProblem<T>, k: usize) -> Self {
        let [a1, _, a3] = *problem.alpha();
        Self::on_interval(problem.alpha(), problem.rho(), k, a1, a3)
    }

    /// The same pencil for a Chebyshev basis on `[lo, hi]`, which need not
    /// contain every singular point.
    pub fn on_interval(alpha: &[T; 3], rho: &[T; 3], k: usize, lo: T, hi: T) -> Self {
        let two = T::c(2.0);
        let (c, w) = ((lo + hi) / two, (hi - lo) / two);
        let t = alpha.map(|a| (a - c) / w);
        let a_poly = poly_from_roots(&t);
        let mut b_poly = vec![T::zero(); 3];
        for j in 0..3 {
            let others: Vec<T> = (0..3).filter(|&i| i != j).map(|i| t[i]).collect();
            for (acc, v) in b_poly.iter_mut().zip(poly_from_roots(&others)) {
                *acc += two * rho[j] * v;
            }
        }
        let rho_sum = rho[0] + rho[1] + rho[2];
        let mu_k = mu(k, &rho_sum);
        let n = k + 1;
        let pad = n + 4;
        let (mut kl, mut ku) = (0usize, 0usize);
        let mut l_cols = Vec::with_capacity(n);
        let mut n_cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![T::zero(); pad];
            e[j] = T::one();
            let s2 = ultra::c1_to_c2(&ultra::t_to_c1(&e));
            let term_a = ultra::mul_poly(&ultra::diff2(&e), &a_poly, two);
            let term_b = ultra::mul_poly(&ultra::c1_to_c2(&ultra::diff1(&e)), &b_poly, two);
            let term_t = ultra::mul_t(&s2, two);
            let mut lc = Vec::new();
            let mut nc = Vec::new();
            for i in 0..n {
                let get = |v: &Vec<T>| v.get(i).copied().unwrap_or(T::zero());
                let l = get(&term_a) + get(&term_b) - mu_k * get(&term_t);
                if l != T::zero() {
                    lc.push((i, l));
                }
                let nv = get(&s2);
                if nv != T::zero() {
                    nc.push((i, nv));
                }
            }
            for &(i, _) in lc.iter().chain(&nc) {
                kl = kl.max(i.saturating_sub(j));
                ku = ku.max(j.saturating_sub(i));
            }
            l_cols.push(lc);
            n_cols.push(nc);
        }
        Self { n, kl, ku, l_cols, n_cols, mu: mu_k, lo, hi }
    }

    fn apply_n(&self, x: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.n];
        for (j, col) in self.n_cols.iter().enumerate() {
            for &(i, v) in col {
                out[i] += v * x[j];
            }
        }
        out
    }

    /// Factors `L + μτ N` for the given `ν` in original coordinates.
    pub fn shifted(&self, nu: T) -> ShiftedPencil<'_, T> {
        let two = T::c(2.0);
        let (c, w) = ((self.lo + self.hi) / two, (self.hi - self.lo) / two);
        let coupling = self.mu * (nu - c) / w;
        let mut m = BandMatrix::zeros(self.n, self.kl, self.ku);
        for j in 0..self.n {
            for &(i, v) in &self.l_cols[j] {
                m.add(i, j, v);
            }
            for &(i, v) in &self.n_cols[j] {
                m.add(i, j, coupling * v);
            }
        }
        ShiftedPencil { pencil: self, lu: m.factor() }
    }
}

pub(crate) struct ShiftedPencil<'a, T> {
    pencil: &'a ChebPencil<T>,
    lu: BandLu<T>,
}

impl<T: Real> ShiftedPencil<'_, T> {
    /// One inverse-iteration step, normalized to unit max-norm with a positive
    /// leading coefficient.
    pub fn step(&self, x: &[T]) -> Vec<T> {
        let mut y = self.lu.solve(&self.pencil.apply_n(x));
        let top = y.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        let sign = if y[y.len() - 1] < T::zero() { -T::one() } else { T::one() };
        for v in &mut y {
            *v = *v * sign / top;
        }
        y
    }

    pub fn start(&self) -> Vec<T> {
        vec![T::one(); self.pencil.n]
    }

    pub fn series(&self, coeffs: Vec<T>) -> ChebSeries<T> {
        ChebSeries::new(coeffs, self.pencil.lo, self.pencil.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// At k = 1 with exponents ½ on (−1, 0, 1): S = x + c with c = ν + 2(1−α)/3 = ν.
    #[test]
    fn k1_symmetric_vector() {
        let p = LameProblem::new([-1.0, 0.0, 1.0], [0.5; 3]).unwrap();
        let pencil = ChebPencil::new(&p, 1);
        let nu = 1.0 / 3f64.sqrt();
        let sp = pencil.shifted(nu);
        let mut x = sp.start();
        for _ in 0..2 {
            x = sp.step(&x);
        }
        // S = c_0 + c_1 x on [−1, 1]: ratio c_0/c_1 = ν.
        assert!((x[0] / x[1] - nu).abs() < 1e-14, "{x:?}");
    }

    #[test]
    fn pencil_is_narrow_banded() {
        let p = LameProblem::new([0.0, 2.0, 8.0], [0.3, 1.7, 0.9]).unwrap();
        let pencil = ChebPencil::new(&p, 30);
        assert!(pencil.kl <= 2 && pencil.ku <= 6, "kl={} ku={}", pencil.kl, pencil.ku);
    }
}
