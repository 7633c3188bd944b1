//! The three-point Heine–Stieltjes problem
//!
//! ```text
//! A(x) φ'' + B(x) φ' = μ (x − ν) φ,
//! A(x) = (x − α₁)(x − α₂)(x − α₃),
//! B(x) = Σ_j 2ρ_j Π_{i≠j} (x − α_i),
//! ```
//!
//! together with its affine normalization `x ↦ (x − α₂)/(α₂ − α₁)`, which
//! sends the singular points to `(−1, 0, α)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Singular points must be separated by at least this fraction of `α₃ − α₁`.
pub const MIN_RELATIVE_GAP: (i64, i64) = (1, 10_000_000_000);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LameProblem<T> {
    alpha: [T; 3],
    rho: [T; 3],
}

impl<T: Scalar> LameProblem<T> {
    /// Validates ordering, positivity and the minimum-gap guard eagerly.
    pub fn new(alpha: [T; 3], rho: [T; 3]) -> Result<Self> {
        let [a1, a2, a3] = alpha.clone();
        if !(a1 < a2) {
            return Err(Error::validation("alpha", format!("alpha1 < alpha2 required, got {a1:?} >= {a2:?}")));
        }
        if !(a2 < a3) {
            return Err(Error::validation("alpha", format!("alpha2 < alpha3 required, got {a2:?} >= {a3:?}")));
        }
        for (i, r) in rho.iter().enumerate() {
            if !r.is_positive() {
                let field = ["rho1", "rho2", "rho3"][i];
                return Err(Error::validation(field, format!("must be positive, got {r:?}")));
            }
        }
        let span = a3.clone() - a1.clone();
        let guard = span * T::from_ratio(MIN_RELATIVE_GAP.0, MIN_RELATIVE_GAP.1);
        if a2.clone() - a1 < guard || a3 - a2 < guard {
            return Err(Error::validation("alpha", "singular points nearly coalesce (gap below 1e-10 of the span)"));
        }
        Ok(Self { alpha, rho })
    }

    pub fn alpha(&self) -> &[T; 3] {
        &self.alpha
    }

    pub fn rho(&self) -> &[T; 3] {
        &self.rho
    }

    pub fn rho_sum(&self) -> T {
        self.rho[0].clone() + self.rho[1].clone() + self.rho[2].clone()
    }

    /// `α₃ − α₁`, the length of the interval that carries every zero.
    pub fn span(&self) -> T {
        self.alpha[2].clone() - self.alpha[0].clone()
    }

    pub fn normalize(&self) -> NormalizedProblem<T> {
        let [a1, a2, a3] = self.alpha.clone();
        let scale = a2.clone() - a1;
        let alpha = (a3 - a2.clone()) / scale.clone();
        NormalizedProblem { alpha, rho: self.rho.clone(), scale, shift: a2 }
    }

    /// `A(x)`.
    pub fn a_poly(&self, x: &T) -> T {
        let [a1, a2, a3] = self.alpha.clone();
        (x.clone() - a1) * (x.clone() - a2) * (x.clone() - a3)
    }

    /// `A'(x)`.
    pub fn a_prime(&self, x: &T) -> T {
        let [a1, a2, a3] = self.alpha.clone();
        let (d1, d2, d3) = (x.clone() - a1, x.clone() - a2, x.clone() - a3);
        d1.clone() * d2.clone() + d1 * d3.clone() + d2 * d3
    }

    /// `A''(x)`.
    pub fn a_second(&self, x: &T) -> T {
        let [a1, a2, a3] = self.alpha.clone();
        T::from_int(2) * ((x.clone() - a1) + (x.clone() - a2) + (x.clone() - a3))
    }

    /// `B(x)`.
    pub fn b_poly(&self, x: &T) -> T {
        let [a1, a2, a3] = self.alpha.clone();
        let [r1, r2, r3] = self.rho.clone();
        let (d1, d2, d3) = (x.clone() - a1, x.clone() - a2, x.clone() - a3);
        let two = T::from_int(2);
        two * (r1 * d2.clone() * d3.clone() + r2 * d1.clone() * d3 + r3 * d1 * d2)
    }
}

/// The problem in the frame where the singular points are `(−1, 0, alpha)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormalizedProblem<T> {
    pub(crate) alpha: T,
    pub(crate) rho: [T; 3],
    pub(crate) scale: T,
    pub(crate) shift: T,
}

impl<T: Scalar> NormalizedProblem<T> {
    pub fn alpha(&self) -> &T {
        &self.alpha
    }

    pub fn rho(&self) -> &[T; 3] {
        &self.rho
    }

    pub fn scale(&self) -> &T {
        &self.scale
    }

    pub fn shift(&self) -> &T {
        &self.shift
    }

    pub fn rho_sum(&self) -> T {
        self.rho[0].clone() + self.rho[1].clone() + self.rho[2].clone()
    }

    /// `g₁ = −2(ρ₂ + ρ₃ − α(ρ₁ + ρ₂))`, the linear coefficient of `−B` in this frame.
    pub fn g1(&self) -> T {
        let [r1, r2, r3] = self.rho.clone();
        -(T::from_int(2) * (r2.clone() + r3 - self.alpha.clone() * (r1 + r2)))
    }

    /// Maps a point of this frame back to the original variable.
    pub fn denormalize(&self, x: &T) -> T {
        denormalize_nu(x, &self.scale, &self.shift)
    }

    /// Maps a point of the original variable into this frame.
    pub fn to_normalized(&self, x: &T) -> T {
        (x.clone() - self.shift.clone()) / self.scale.clone()
    }
}

/// `ν ↦ ν·scale + shift`.
pub fn denormalize_nu<T: Scalar>(nu_normalized: &T, scale: &T, shift: &T) -> T {
    nu_normalized.clone() * scale.clone() + shift.clone()
}

/// `μ_j = j(j − 1 + 2Σρ)`, the leading-coefficient eigenvalue of the operator at degree `j`.
pub fn mu<T: Scalar>(j: usize, rho_sum: &T) -> T {
    let j_t = T::from_count(j);
    j_t.clone() * (j_t - T::one() + T::from_int(2) * rho_sum.clone())
}

/// Number of Van Vleck zeros of order `k` for three real singular points.
///
/// This is Heine's bound `(n + k − 2)! / ((n − 2)! k!)` at `n = 3`, which is
/// attained when the singular points are real.
pub fn heine_count(k: usize) -> usize {
    heine_bound(3, k)
}

/// Heine's bound for `n` singular points.
pub fn heine_bound(n: usize, k: usize) -> usize {
    assert!(n >= 2, "need at least two singular points");
    // C(n + k − 2, k), accumulated so every intermediate stays integral.
    (1..=k).fold(1usize, |acc, i| acc * (n - 2 + i) / i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn problem(alpha: [f64; 3], rho: [f64; 3]) -> LameProblem<f64> {
        LameProblem::new(alpha, rho).unwrap()
    }

    #[test]
    fn canonical_frame_is_fixed() {
        let np = problem([-1.0, 0.0, 1.0], [0.5; 3]).normalize();
        assert_eq!((np.alpha, np.scale, np.shift), (1.0, 1.0, 0.0));
    }

    #[test]
    fn normalize_examples() {
        let np = problem([0.0, 2.0, 8.0], [1.0, 2.0, 3.0]).normalize();
        assert_eq!((np.alpha, np.scale, np.shift), (3.0, 2.0, 2.0));
        let np = problem([-3.0, -1.0, 0.0], [0.1, 0.2, 0.3]).normalize();
        assert_eq!((np.alpha, np.scale, np.shift), (0.5, 2.0, -1.0));
    }

    #[test]
    fn denormalize_examples() {
        assert_eq!(denormalize_nu(&0.0, &2.0, &2.0), 2.0);
        assert_eq!(denormalize_nu(&3.0, &2.0, &2.0), 8.0);
        assert_eq!(denormalize_nu(&-1.0, &2.0, &2.0), 0.0);
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(0, &1.7), 0.0);
        assert_eq!(mu(1, &1.5), 3.0);
        for k in 1..20usize {
            assert_eq!(mu(k, &1.5), (k * (k + 2)) as f64);
        }
    }

    #[test]
    fn heine_count_examples() {
        assert_eq!(heine_count(1), 2);
        assert_eq!(heine_count(2), 3);
        assert_eq!(heine_count(10), 11);
        // n = 4 has (k+1)(k+2)/2 solutions.
        assert_eq!(heine_bound(4, 3), 10);
    }

    #[test]
    fn rejects_bad_input_naming_field() {
        let err = LameProblem::new([1.0, 0.0, -1.0], [0.5; 3]).unwrap_err();
        assert!(matches!(err, Error::Validation { field: "alpha", .. }));
        let err = LameProblem::new([-1.0, 0.0, 1.0], [0.5, 0.0, 0.5]).unwrap_err();
        assert!(matches!(err, Error::Validation { field: "rho2", .. }));
        let err = LameProblem::new([-1.0, 0.0, 1.0], [0.5, 0.5, -1.0]).unwrap_err();
        assert!(matches!(err, Error::Validation { field: "rho3", .. }));
        assert!(LameProblem::new([0.0, 1e-12, 1.0], [0.5; 3]).is_err());
        assert!(LameProblem::new([0.0, f64::NAN, 1.0], [0.5; 3]).is_err());
    }

    #[test]
    fn exact_rational_normalization() {
        let q = |n, d| BigRational::from_ratio(n, d);
        let p = LameProblem::new([q(0, 1), q(2, 1), q(8, 1)], [q(1, 2), q(1, 2), q(1, 2)]).unwrap();
        assert_eq!(p.normalize().alpha, q(3, 1));
    }

    #[test]
    fn a_b_polynomials_match_definition() {
        let p = problem([-1.0, 0.0, 2.0], [0.25, 0.5, 0.75]);
        let x = 0.3;
        let b = 2.0 * (0.25 * (x - 0.0) * (x - 2.0) + 0.5 * (x + 1.0) * (x - 2.0) + 0.75 * (x + 1.0) * x);
        assert!((p.b_poly(&x) - b).abs() < 1e-15);
        let h = 1e-5;
        let fd = (p.a_poly(&(x + h)) - p.a_poly(&(x - h))) / (2.0 * h);
        assert!((p.a_prime(&x) - fd).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn normalize_round_trip(a1 in -50.0f64..50.0, d1 in 1e-3f64..40.0, d2 in 1e-3f64..40.0,
                                r in prop::array::uniform3(1e-2f64..1e2)) {
            let p = problem([a1, a1 + d1, a1 + d1 + d2], r);
            let np = p.normalize();
            prop_assert!(np.alpha > 0.0 && np.scale > 0.0);
            let back = [np.denormalize(&-1.0), np.denormalize(&0.0), np.denormalize(&np.alpha)];
            for (b, a) in back.iter().zip(p.alpha()) {
                prop_assert!((b - a).abs() <= 1e-14 * p.span().max(a.abs()));
            }
        }

        #[test]
        fn mu_strictly_increasing(j in 1usize..1_000_000, rs in 1e-3f64..1e3) {
            let diff = mu(j, &rs) - mu(j - 1, &rs);
            prop_assert!(diff > 0.0);
            prop_assert!((diff - (2.0 * (j as f64 - 1.0) + 2.0 * rs)).abs() <= 1e-9 * diff.max(1.0) * j as f64);
        }
    }
}
