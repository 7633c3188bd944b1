//! The limiting Van Vleck zero density `ρ_A` and the arcsine laws built from
//! the recurrence limits.
//!
//! ```text
//! ρ_A(x) = (1/2π) ∫_{α₂}^{α₃} ds / √((α₃−s)(s−α₂)(s−α₁)(s−x)),   α₁ < x < α₂
//! ρ_A(x) = (1/2π) ∫_{α₁}^{α₂} ds / √((α₃−s)(α₂−s)(s−α₁)(x−s)),   α₂ < x < α₃
//! ```
//!
//! After `s = α₂ + (α₃−α₂)sin²θ` (resp. `s = α₁ + (α₂−α₁)sin²θ`, `θ ↦ π/2−θ`)
//! both branches read `(1/π) ∫₀^{π/2} dθ / √((p + L sin²θ)(q + L sin²θ))`
//! with `q = |x − α₂|`.

use serde::{Deserialize, Serialize};

use super::{a_limit, b_limit};
use crate::error::{Error, Result};
use crate::problem::LameProblem;
use crate::quad::{adaptive_gauss_legendre, adaptive_simpson, gauss_legendre};
use crate::scalar::Real;
use crate::stats::{ks_empirical, ks_on_grid};

/// Points closer than this to `α₂` are rejected by [`RhoA::density`].
pub const ALPHA2_EXCLUSION: f64 = 1e-8;
/// [`RhoA::heun_residual`] needs `x` this far (relative to `α₃ − α₁`) from every `αᵢ`.
pub const HEUN_CLEARANCE: f64 = 0.05;
const HEUN_STEP: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RhoA<T> {
    alpha: [T; 3],
}

impl<T: Real> RhoA<T> {
    pub fn new(problem: &LameProblem<T>) -> Self {
        Self { alpha: *problem.alpha() }
    }

    pub fn support(&self) -> (T, T) {
        (self.alpha[0], self.alpha[2])
    }

    fn span(&self) -> T {
        self.alpha[2] - self.alpha[0]
    }

    /// `(p, L)` for the branch on `side`.
    fn branch(&self, side: Side) -> (T, T) {
        let [a1, a2, a3] = self.alpha;
        match side {
            Side::Left => (a2 - a1, a3 - a2),
            Side::Right => (a3 - a2, a2 - a1),
        }
    }

    /// The density at distance `q > 0` from `α₂` on `side`.
    fn at_offset(&self, side: Side, q: T) -> Result<T> {
        let (p, l) = self.branch(side);
        let g = |t: T| {
            let s2 = t.sin().powi(2);
            T::one() / ((p + l * s2) * (q + l * s2)).sqrt()
        };
        let half_pi = T::FRAC_PI_2();
        let crude = gauss_legendre(g, T::zero(), half_pi);
        Ok(adaptive_gauss_legendre(g, T::zero(), half_pi, T::c(16.0) * T::epsilon() * crude)? / T::PI())
    }

    fn locate(&self, x: T) -> Result<(Side, T)> {
        let [a1, a2, a3] = self.alpha;
        if !(a1 < x && x < a3) {
            return Err(Error::Domain(format!("x = {x:e} lies outside the support ({a1:e}, {a3:e})")));
        }
        Ok(if x < a2 { (Side::Left, a2 - x) } else { (Side::Right, x - a2) })
    }

    /// `ρ_A(x)` for `x ∈ (α₁, α₃)` at least [`ALPHA2_EXCLUSION`] from `α₂`.
    pub fn density(&self, x: T) -> Result<T> {
        let (side, q) = self.locate(x)?;
        if q < T::c(ALPHA2_EXCLUSION) {
            return Err(Error::Domain(format!("x = {x:e} is within {ALPHA2_EXCLUSION:e} of alpha2, where the density diverges")));
        }
        self.at_offset(side, q)
    }

    /// `∫_{α₁}^{x} ρ_A`, exchanging the order of integration so the inner
    /// integral is elementary; the outer one is smooth in `θ`.
    pub fn cdf(&self, x: T) -> Result<T> {
        let [a1, a2, a3] = self.alpha;
        if x <= a1 {
            return Ok(T::zero());
        }
        if x >= a3 {
            return Ok(T::one());
        }
        let half_pi = T::FRAC_PI_2();
        let tol = T::c(1e-14);
        let two_over_pi = T::c(2.0) / T::PI();
        let left = |x: T| {
            // (2/π) ∫ [1 − √((s−x)/(s−α₁))] dθ, s = α₂ + (α₃−α₂)sin²θ.
            let (p, l) = self.branch(Side::Left);
            let f = move |t: T| {
                let s2 = t.sin().powi(2);
                let u = p + l * s2;
                let v = (a2 - x) + l * s2;
                (x - a1) / (u * (T::one() + (v / u).sqrt()))
            };
            adaptive_gauss_legendre(f, T::zero(), half_pi, tol).map(|v| v * two_over_pi)
        };
        if x <= a2 {
            return left(x).map(|v| v.min(T::one()));
        }
        let (p, m) = self.branch(Side::Right);
        let f = |t: T| {
            // (2/π) ∫ [√(x−s) − √(α₂−s)] / √(α₃−s) dθ, s = α₁ + (α₂−α₁)sin²θ.
            let c2 = t.cos().powi(2);
            let d = (x - a2) / (((x - a2) + m * c2).sqrt() + (m * c2).sqrt());
            d / (p + m * c2).sqrt()
        };
        let right = adaptive_gauss_legendre(f, T::zero(), half_pi, tol)? * two_over_pi;
        Ok((left(a2)? + right).min(T::one()))
    }

    /// `∫ 2 p u ρ(p u²) du` over `[u0, u1]` on `side`, which removes the
    /// logarithmic singularity at `α₂`; `p` is the distance from `α₂` to
    /// the outer end of the branch.
    fn graded<F>(&self, side: Side, u0: T, u1: T, integrate: F) -> Result<T>
    where
        F: Fn(&dyn Fn(T) -> T, T, T) -> Result<T>,
    {
        let p = match side {
            Side::Left => self.alpha[1] - self.alpha[0],
            Side::Right => self.alpha[2] - self.alpha[1],
        };
        let failed = std::cell::Cell::new(None);
        let f = |u: T| {
            if u == T::zero() {
                return T::zero();
            }
            match self.at_offset(side, p * u * u) {
                Ok(v) => T::c(2.0) * p * u * v,
                Err(e) => {
                    failed.set(Some(e));
                    T::zero()
                }
            }
        };
        let v = integrate(&f, u0, u1)?;
        match failed.into_inner() {
            Some(e) => Err(e),
            None => Ok(v),
        }
    }

    /// `∫ρ_A` over the support by adaptive quadrature of the density.
    pub fn mass(&self) -> Result<T> {
        let gl = |f: &dyn Fn(T) -> T, a: T, b: T| adaptive_gauss_legendre(f, a, b, T::c(1e-12));
        Ok(self.graded(Side::Left, T::zero(), T::one(), gl)? + self.graded(Side::Right, T::zero(), T::one(), gl)?)
    }

    /// The CDF by adaptive Simpson on the density, for cross-checking [`RhoA::cdf`].
    pub fn cdf_by_simpson(&self, x: T, tol: T) -> Result<T> {
        let [a1, a2, a3] = self.alpha;
        if x <= a1 {
            return Ok(T::zero());
        }
        if x >= a3 {
            return Ok(T::one());
        }
        let simpson = |f: &dyn Fn(T) -> T, a: T, b: T| adaptive_simpson(f, a, b, tol);
        if x <= a2 {
            let u0 = ((a2 - x) / (a2 - a1)).sqrt();
            return self.graded(Side::Left, u0, T::one(), simpson);
        }
        let u1 = ((x - a2) / (a3 - a2)).sqrt();
        Ok(self.graded(Side::Left, T::zero(), T::one(), simpson)? + self.graded(Side::Right, T::zero(), u1, simpson)?)
    }

    /// Kolmogorov distance from the empirical CDF of sorted `zeros`.
    pub fn ks_to_samples(&self, zeros: &[T]) -> Result<T> {
        let cdfs = zeros.iter().map(|&z| self.cdf(z)).collect::<Result<Vec<T>>>()?;
        let mut it = cdfs.into_iter();
        Ok(ks_empirical(zeros, |_| it.next().expect("one value per sample")))
    }

    /// Relative residual of `8Aρ'' + 8A'ρ' + A''ρ` with fourth-order central
    /// differences of step `1e−4·(α₃ − α₁)`, normalized by the sum of the
    /// three terms' magnitudes.
    pub fn heun_residual(&self, x: T) -> Result<T> {
        let [a1, a2, a3] = self.alpha;
        let clearance = T::c(HEUN_CLEARANCE) * self.span();
        if self.alpha.iter().any(|&a| (x - a).abs() < clearance) || !(a1 < x && x < a3) {
            return Err(Error::Domain(format!(
                "x = {x:e} must be inside the support and {HEUN_CLEARANCE} of the span away from every singular point"
            )));
        }
        let h = T::c(HEUN_STEP) * self.span();
        let f = [-2.0, -1.0, 0.0, 1.0, 2.0].iter().map(|&j| self.density(x + T::c(j) * h)).collect::<Result<Vec<T>>>()?;
        let [fm2, fm1, f0, fp1, fp2] = [f[0], f[1], f[2], f[3], f[4]];
        let twelve = T::c(12.0);
        let d1 = (fm2 - T::c(8.0) * fm1 + T::c(8.0) * fp1 - fp2) / (twelve * h);
        let d2 = (-fm2 + T::c(16.0) * fm1 - T::c(30.0) * f0 + T::c(16.0) * fp1 - fp2) / (twelve * h * h);
        let (u, v, w) = (x - a1, x - a2, x - a3);
        let a = u * v * w;
        let ap = u * v + u * w + v * w;
        let app = T::c(2.0) * (u + v + w);
        let terms = [T::c(8.0) * a * d2, T::c(8.0) * ap * d1, app * f0];
        let size = terms.iter().fold(T::zero(), |s, t| s + t.abs());
        Ok((terms[0] + terms[1] + terms[2]).abs() / size)
    }
}

/// `ρ_A(x)`; see [`RhoA::density`].
pub fn density_rho_a<T: Real>(problem: &LameProblem<T>, x: T) -> Result<T> {
    RhoA::new(problem).density(x)
}

/// See [`RhoA::heun_residual`].
pub fn heun_residual<T: Real>(problem: &LameProblem<T>, x: T) -> Result<T> {
    RhoA::new(problem).heun_residual(x)
}

/// Which half-width the arcsine support uses: `2/b` as printed alongside
/// the limit law, or `2√b` as in the standard form of that theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArcsineVariant {
    Printed,
    Standard,
}

impl ArcsineVariant {
    pub const ALL: [ArcsineVariant; 2] = [ArcsineVariant::Printed, ArcsineVariant::Standard];
}

/// Arcsine law `1/(π√((hi − x)(x − lo)))` on `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Arcsine<T> {
    pub lo: T,
    pub hi: T,
    pub variant: ArcsineVariant,
}

impl<T: Real> Arcsine<T> {
    /// Support `a ± 2/b` or `a ± 2√b`; `b` must be positive.
    pub fn from_limits(a: T, b: T, variant: ArcsineVariant) -> Result<Self> {
        if !(b > T::zero()) || !b.is_finite() || !a.is_finite() {
            return Err(Error::validation("b_param", format!("must be positive and finite, got {b:e}")));
        }
        let half = match variant {
            ArcsineVariant::Printed => T::c(2.0) / b,
            ArcsineVariant::Standard => T::c(2.0) * b.sqrt(),
        };
        Ok(Self { lo: a - half, hi: a + half, variant })
    }

    /// The law attached to the limits of `a_n` and `b_n`.
    pub fn for_problem(problem: &LameProblem<T>, variant: ArcsineVariant) -> Result<Self> {
        Self::from_limits(a_limit(problem), b_limit(problem), variant)
    }

    pub fn density(&self, x: T) -> Result<T> {
        if !(self.lo < x && x < self.hi) {
            return Err(Error::Domain(format!("x = {x:e} lies outside the arcsine support ({:e}, {:e})", self.lo, self.hi)));
        }
        Ok(T::one() / (T::PI() * ((self.hi - x) * (x - self.lo)).sqrt()))
    }

    pub fn cdf(&self, x: T) -> T {
        if x <= self.lo {
            return T::zero();
        }
        if x >= self.hi {
            return T::one();
        }
        T::c(2.0) / T::PI() * ((x - self.lo) / (self.hi - self.lo)).sqrt().asin()
    }
}

/// Arcsine density for recurrence limits `a`, `b_param`.
pub fn density_arcsine<T: Real>(a: T, b_param: T, x: T, variant: ArcsineVariant) -> Result<T> {
    Arcsine::from_limits(a, b_param, variant)?.density(x)
}

/// `max |F_ρA − F_arcsine|` on a uniform grid of `points` over the union of
/// both supports, plus every support endpoint.
pub fn ks_rho_vs_arcsine<T: Real>(problem: &LameProblem<T>, variant: ArcsineVariant, points: usize) -> Result<T> {
    let rho = RhoA::new(problem);
    let arc = Arcsine::for_problem(problem, variant)?;
    let (a1, a3) = rho.support();
    let (lo, hi) = (a1.min(arc.lo), a3.max(arc.hi));
    let mut grid: Vec<T> = (0..=points).map(|i| lo + (hi - lo) * T::from_count(i) / T::from_count(points)).collect();
    grid.extend([a1, a3, arc.lo, arc.hi, problem.alpha()[1]]);
    let f = grid.iter().map(|&x| rho.cdf(x)).collect::<Result<Vec<T>>>()?;
    let mut it = f.into_iter();
    Ok(ks_on_grid(&grid, |_| it.next().expect("one value per point"), |x| arc.cdf(x)))
}

/// One row of density data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityRow<T> {
    pub x: T,
    pub rho_a: T,
    pub arcsine: T,
    pub empirical_cdf: T,
}

/// `ρ_A`, the arcsine density (zero off its support) and the empirical CDF
/// of `zeros` on a uniform interior grid of `points` nodes, skipping nodes
/// too close to `α₂`.
pub fn density_rows<T: Real>(problem: &LameProblem<T>, zeros: &[T], variant: ArcsineVariant, points: usize) -> Result<Vec<DensityRow<T>>> {
    let rho = RhoA::new(problem);
    let arc = Arcsine::for_problem(problem, variant)?;
    let (a1, a3) = rho.support();
    let a2 = problem.alpha()[1];
    let n = T::from_count(zeros.len());
    (1..=points)
        .map(|i| a1 + (a3 - a1) * T::from_count(i) / T::from_count(points + 1))
        .filter(|&x| (x - a2).abs() >= T::c(ALPHA2_EXCLUSION))
        .map(|x| {
            Ok(DensityRow {
                x,
                rho_a: rho.density(x)?,
                arcsine: arc.density(x).unwrap_or(T::zero()),
                empirical_cdf: T::from_count(zeros.partition_point(|&z| z <= x)) / n,
            })
        })
        .collect()
}
