//! Chebyshev series on an interval, plus the ultraspherical operators used to
//! solve polynomial ODEs in coefficient space.

use serde::{Deserialize, Serialize};

use crate::scalar::Real;

/// `f(x) = Σ c_n T_n((x − center)/half_width)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChebSeries<T> {
    pub coeffs: Vec<T>,
    pub center: T,
    pub half_width: T,
}

impl<T: Real> ChebSeries<T> {
    pub fn new(coeffs: Vec<T>, lo: T, hi: T) -> Self {
        let two = T::c(2.0);
        Self { coeffs, center: (lo + hi) / two, half_width: (hi - lo) / two }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    #[inline]
    pub fn local(&self, x: T) -> T {
        (x - self.center) / self.half_width
    }

    /// Clenshaw recurrence.
    pub fn eval(&self, x: T) -> T {
        clenshaw(&self.coeffs, self.local(x))
    }

    /// Series of `d/dx` (the `1/half_width` factor included).
    pub fn derivative(&self) -> Self {
        let n = self.coeffs.len();
        if n <= 1 {
            return Self { coeffs: vec![T::zero()], center: self.center, half_width: self.half_width };
        }
        let mut d = vec![T::zero(); n + 1];
        for j in (0..n - 1).rev() {
            d[j] = d[j + 2] + T::c(2.0) * T::from_count(j + 1) * self.coeffs[j + 1];
        }
        d[0] = d[0] / T::c(2.0);
        d.truncate(n - 1);
        for v in &mut d {
            *v = *v / self.half_width;
        }
        Self { coeffs: d, center: self.center, half_width: self.half_width }
    }

    pub fn scaled(mut self, s: T) -> Self {
        for c in &mut self.coeffs {
            *c = *c * s;
        }
        self
    }

    pub fn max_abs_coeff(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.abs()))
    }

    /// Monomial coefficients in the local variable `t`. Ill-conditioned for
    /// large degree; meant for small cross-checks.
    pub fn to_local_monomial(&self) -> Vec<T> {
        let n = self.coeffs.len();
        let mut out = vec![T::zero(); n];
        let mut prev = vec![T::zero(); n];
        let mut cur = vec![T::zero(); n];
        if n == 0 {
            return out;
        }
        prev[0] = T::one();
        out[0] = self.coeffs[0];
        if n == 1 {
            return out;
        }
        cur[1] = T::one();
        out[1] = out[1] + self.coeffs[1];
        for m in 2..n {
            // T_m = 2t T_{m−1} − T_{m−2}
            let mut next = vec![T::zero(); n];
            for i in 0..m {
                next[i + 1] = next[i + 1] + T::c(2.0) * cur[i];
            }
            for i in 0..m - 1 {
                next[i] = next[i] - prev[i];
            }
            for i in 0..=m {
                out[i] = out[i] + self.coeffs[m] * next[i];
            }
            prev = std::mem::replace(&mut cur, next);
        }
        out
    }
}

pub(crate) fn clenshaw<T: Real>(c: &[T], t: T) -> T {
    let n = c.len();
    if n == 0 {
        return T::zero();
    }
    let two_t = t + t;
    let (mut b1, mut b2) = (T::zero(), T::zero());
    for j in (1..n).rev() {
        let b0 = c[j] + two_t * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    c[0] + t * b1 - b2
}

/// `n` first-kind Chebyshev points on `[lo, hi]`, ascending.
pub fn chebyshev_points<T: Real>(n: usize, lo: T, hi: T) -> Vec<T> {
    let two = T::c(2.0);
    let (c, w) = ((lo + hi) / two, (hi - lo) / two);
    (0..n)
        .map(|i| {
            let theta = T::PI() * (T::from_count(n - 1 - i) + T::c(0.5)) / T::from_count(n);
            c + w * theta.cos()
        })
        .collect()
}

/// Ultraspherical-basis operators acting on coefficient vectors. Output
/// vectors keep the input length unless noted.
pub(crate) mod ultra {
    use crate::scalar::Real;

    /// `T_n` coefficients to `C^(1)` coefficients.
    pub fn t_to_c1<T: Real>(c: &[T]) -> Vec<T> {
        let half = T::c(0.5);
        (0..c.len())
            .map(|j| {
                let head = if j == 0 { c[0] } else { half * c[j] };
                head - if j + 2 < c.len() { half * c[j + 2] } else { T::zero() }
            })
            .collect()
    }

    /// `C^(1)` to `C^(2)`.
    pub fn c1_to_c2<T: Real>(c: &[T]) -> Vec<T> {
        (0..c.len())
            .map(|j| {
                let head = c[j] / T::from_count(j + 1);
                head - if j + 2 < c.len() { c[j + 2] / T::from_count(j + 3) } else { T::zero() }
            })
            .collect()
    }

    /// `d/dt`: `T_n` to `C^(1)`.
    pub fn diff1<T: Real>(c: &[T]) -> Vec<T> {
        (0..c.len()).map(|j| if j + 1 < c.len() { T::from_count(j + 1) * c[j + 1] } else { T::zero() }).collect()
    }

    /// `d²/dt²`: `T_n` to `C^(2)`.
    pub fn diff2<T: Real>(c: &[T]) -> Vec<T> {
        (0..c.len()).map(|j| if j + 2 < c.len() { T::c(2.0) * T::from_count(j + 2) * c[j + 2] } else { T::zero() }).collect()
    }

    /// Multiplication by `t` in the `C^(λ)` basis; the output is one longer.
    pub fn mul_t<T: Real>(c: &[T], lambda: T) -> Vec<T> {
        let mut out = vec![T::zero(); c.len() + 1];
        let two = T::c(2.0);
        for (n, &v) in c.iter().enumerate() {
            let nn = T::from_count(n);
            let den = two * (nn + lambda);
            out[n + 1] += v * (nn + T::one()) / den;
            if n > 0 {
                out[n - 1] += v * (nn + two * lambda - T::one()) / den;
            }
        }
        out
    }

    /// Multiplication by a polynomial given by monomial coefficients in `t`.
    pub fn mul_poly<T: Real>(c: &[T], poly: &[T], lambda: T) -> Vec<T> {
        let deg = poly.len() - 1;
        let mut acc: Vec<T> = c.iter().map(|&v| v * poly[deg]).collect();
        for i in (0..deg).rev() {
            acc = mul_t(&acc, lambda);
            for (a, &v) in acc.iter_mut().zip(c) {
                *a += v * poly[i];
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::ultra::*;
    use super::*;

    fn u_eval(c: &[f64], t: f64) -> f64 {
        // Σ c_n U_n(t)
        let (mut u0, mut u1) = (1.0, 2.0 * t);
        let mut s = 0.0;
        for (n, v) in c.iter().enumerate() {
            let u = match n {
                0 => 1.0,
                1 => 2.0 * t,
                _ => {
                    let u2 = 2.0 * t * u1 - u0;
                    u0 = u1;
                    u1 = u2;
                    u2
                }
            };
            s += v * u;
        }
        s
    }

    fn c2_eval(c: &[f64], t: f64) -> f64 {
        // C^(2)_0 = 1, C^(2)_1 = 4t, n C_n = 2t(n+1) C_{n−1} − (n+2) C_{n−2}
        let mut vals = vec![1.0, 4.0 * t];
        for n in 2..c.len() {
            let nn = n as f64;
            let v = (2.0 * t * (nn + 1.0) * vals[n - 1] - (nn + 2.0) * vals[n - 2]) / nn;
            vals.push(v);
        }
        c.iter().zip(&vals).map(|(a, b)| a * b).sum()
    }

    #[test]
    fn clenshaw_matches_cosine_definition() {
        let c = [0.3, -1.2, 0.7, 2.0, -0.1];
        for &t in &[-0.9, -0.2, 0.0, 0.5, 1.0] {
            let direct: f64 = c.iter().enumerate().map(|(n, v)| v * (n as f64 * f64::acos(t)).cos()).sum();
            assert!((clenshaw(&c, t) - direct).abs() < 1e-13);
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let s = ChebSeries::<f64>::new(vec![0.3, -1.2, 0.7, 2.0, -0.1, 0.05], -2.0, 5.0);
        let d = s.derivative();
        let h = 1e-6;
        for &x in &[-1.5, 0.0, 2.2, 4.9] {
            let fd = (s.eval(x + h) - s.eval(x - h)) / (2.0 * h);
            let err: f64 = d.eval(x) - fd;
            assert!(err.abs() < 1e-7, "{x}");
        }
    }

    #[test]
    fn local_monomial_round_trip() {
        let s = ChebSeries::new(vec![0.5, 0.25, -1.0, 0.125], -1.0, 1.0);
        let m = s.to_local_monomial();
        for &t in &[-0.7, 0.1, 0.8] {
            let h: f64 = m.iter().rev().fold(0.0, |acc, v| acc * t + v);
            assert!((h - s.eval(t)).abs() < 1e-14);
        }
    }

    #[test]
    fn ultraspherical_operators_agree_with_direct_evaluation() {
        let c = vec![0.3, -1.2, 0.7, 2.0, -0.1, 0.4, 0.0, 0.0];
        let s = ChebSeries::new(c.clone(), -1.0, 1.0);
        let d1 = s.derivative();
        let d2 = d1.derivative();
        for &t in &[-0.8, -0.1, 0.3, 0.95] {
            assert!((u_eval(&t_to_c1(&c), t) - s.eval(t)).abs() < 1e-13);
            assert!((c2_eval(&c1_to_c2(&t_to_c1(&c)), t) - s.eval(t)).abs() < 1e-12);
            assert!((u_eval(&diff1(&c), t) - d1.eval(t)).abs() < 1e-12);
            assert!((c2_eval(&diff2(&c), t) - d2.eval(t)).abs() < 1e-11);
            let c2 = c1_to_c2(&t_to_c1(&c));
            let poly = [0.5, -1.0, 0.25, 2.0];
            let p = poly.iter().rev().fold(0.0, |acc, v| acc * t + v);
            let prod = mul_poly(&c2, &poly, 2.0);
            assert!((c2_eval(&prod, t) - p * s.eval(t)).abs() < 1e-11);
        }
    }

    #[test]
    fn points_are_ascending_and_interior() {
        let p = chebyshev_points(200, -1.0, 3.0);
        assert!(p.windows(2).all(|w| w[0] < w[1]));
        assert!(p[0] > -1.0 && p[199] < 3.0);
    }
}
