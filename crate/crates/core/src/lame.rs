//! The physical Lamé equation in its algebraic form,
//!
//! ```text
//! φ'' + ½(1/x + 1/(x−1) + 1/(x−c)) φ' = (n(n+1)x − c h) / (4x(x−1)(x−c)) φ,   c = k⁻²,
//! ```
//!
//! whose eigenfunctions are `|x|^{γ₁/2}|x−1|^{γ₂/2}|x−c|^{γ₃/2} P_m(x)` with
//! `n = 2m + |γ|`. `P_m` is a Stieltjes polynomial for singular points
//! `(0, 1, c)` and exponents `ρᵢ = (γᵢ + ½)/2`, and the eigenvalue `h` is
//! an affine function of its Van Vleck zero `λ`.

use serde::{Deserialize, Serialize};

use crate::eigen::{van_vleck_eigenvalues, StieltjesPolynomial};
use crate::error::{Error, Result};
use crate::interlace::{check_interlacing, InterlaceVerdict};
use crate::problem::{mu, LameProblem};
use crate::scalar::Real;

/// A triple `(γ₁, γ₂, γ₃) ∈ {0,1}³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u8; 3]", into = "[u8; 3]")]
pub struct GammaClass {
    gamma: [u8; 3],
}

impl TryFrom<[u8; 3]> for GammaClass {
    type Error = Error;

    fn try_from(gamma: [u8; 3]) -> Result<Self> {
        GammaClass::new(gamma)
    }
}

impl From<GammaClass> for [u8; 3] {
    fn from(g: GammaClass) -> Self {
        g.gamma
    }
}

impl GammaClass {
    /// All eight classes in lexicographic order.
    pub const ALL: [GammaClass; 8] = {
        let mut out = [GammaClass { gamma: [0; 3] }; 8];
        let mut i = 0;
        while i < 8 {
            out[i] = GammaClass { gamma: [(i >> 2) as u8 & 1, (i >> 1) as u8 & 1, i as u8 & 1] };
            i += 1;
        }
        out
    };

    pub fn new(gamma: [u8; 3]) -> Result<Self> {
        if gamma.iter().any(|&g| g > 1) {
            return Err(Error::validation("gamma", format!("entries must be 0 or 1, got {gamma:?}")));
        }
        Ok(Self { gamma })
    }

    pub fn gamma(&self) -> [u8; 3] {
        self.gamma
    }

    /// `|γ| = γ₁ + γ₂ + γ₃`.
    pub fn weight(&self) -> usize {
        self.gamma.iter().map(|&g| g as usize).sum()
    }

    pub fn parity(&self) -> usize {
        self.weight() % 2
    }

    /// `m = (n − |γ|)/2`, when the class takes part in `Λ_n`.
    pub fn degree_for(&self, n: usize) -> Result<usize> {
        let w = self.weight();
        if n % 2 != w % 2 {
            return Err(Error::Parity { n, gamma_weight: w });
        }
        if n < w {
            return Err(Error::validation("n", format!("n = {n} is below |gamma| = {w}")));
        }
        Ok((n - w) / 2)
    }

    fn g<T: Real>(&self, i: usize) -> T {
        T::from_count(self.gamma[i] as usize)
    }
}

/// Classes taking part in `Λ_n`.
pub fn admissible_classes(n: usize) -> Vec<GammaClass> {
    GammaClass::ALL.into_iter().filter(|g| g.degree_for(n).is_ok()).collect()
}

/// A modulus `0 < k < 1` and a degree `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LamePhysicalProblem<T> {
    pub modulus: T,
    pub n: usize,
}

impl<T: Real> LamePhysicalProblem<T> {
    pub fn new(modulus: T, n: usize) -> Result<Self> {
        require_modulus(modulus)?;
        if n == 0 {
            return Err(Error::validation("n", "must be positive"));
        }
        Ok(Self { modulus, n })
    }

    /// `(0, 1, k⁻²)`.
    pub fn singular_points(&self) -> [T; 3] {
        singular_points(self.modulus)
    }
}

fn require_modulus<T: Real>(modulus: T) -> Result<()> {
    if !(modulus > T::zero() && modulus < T::one()) {
        return Err(Error::validation("modulus", format!("must lie in (0, 1), got {modulus:e}")));
    }
    Ok(())
}

pub fn singular_points<T: Real>(modulus: T) -> [T; 3] {
    [T::zero(), T::one(), (modulus * modulus).recip()]
}

/// `α = (0, 1, k⁻²)`, `ρᵢ = (γᵢ + ½)/2`.
pub fn gamma_to_problem<T: Real>(g: GammaClass, modulus: T) -> Result<LameProblem<T>> {
    require_modulus(modulus)?;
    let half = T::c(0.5);
    LameProblem::new(singular_points(modulus), [0, 1, 2].map(|i| (g.g::<T>(i) + half) / T::c(2.0)))
}

/// `(1+k²)γ₁ + γ₂ + k²γ₃ + 2k²γ₁γ₃ + 2γ₁γ₂`: the part of `h` carried by the
/// prefactor, and the eigenvalue of the `m = 0` member.
pub fn class_offset<T: Real>(g: GammaClass, modulus: T) -> T {
    let k2 = modulus * modulus;
    let [g1, g2, g3] = [0, 1, 2].map(|i| g.g::<T>(i));
    (T::one() + k2) * g1 + g2 + k2 * g3 + T::c(2.0) * k2 * g1 * g3 + T::c(2.0) * g1 * g2
}

fn mu_class<T: Real>(g: GammaClass, m: usize) -> Result<T> {
    if m == 0 {
        return Err(Error::validation("m", "lambda is undefined for m = 0 (constant P_0)"));
    }
    // μ_m = m(m − 1 + 2Σρ) with 2Σρ = |γ| + 3/2.
    Ok(mu(m, &((T::from_count(g.weight()) + T::c(1.5)) / T::c(2.0))))
}

/// `λ = k⁻²(h − offset) / (4 m(m + |γ| + ½))`: the Van Vleck zero of `P_m`.
pub fn lambda_from_h<T: Real>(h: T, g: GammaClass, modulus: T, m: usize) -> Result<T> {
    require_modulus(modulus)?;
    let c = (modulus * modulus).recip();
    Ok(c * (h - class_offset(g, modulus)) / (T::c(4.0) * mu_class::<T>(g, m)?))
}

/// Inverse of [`lambda_from_h`].
pub fn h_from_lambda<T: Real>(lambda: T, g: GammaClass, modulus: T, m: usize) -> Result<T> {
    require_modulus(modulus)?;
    Ok(class_offset(g, modulus) + T::c(4.0) * mu_class::<T>(g, m)? * lambda * modulus * modulus)
}

/// `λ = (k⁻²h − offset) / (m(m + |γ| + ½))`, in the printed normalization.
/// It does not reproduce the Van Vleck zeros; kept for comparison.
pub fn lambda_from_h_printed<T: Real>(h: T, g: GammaClass, modulus: T, m: usize) -> Result<T> {
    require_modulus(modulus)?;
    let c = (modulus * modulus).recip();
    Ok((c * h - class_offset(g, modulus)) / mu_class::<T>(g, m)?)
}

/// Inverse of [`lambda_from_h_printed`].
pub fn h_from_lambda_printed<T: Real>(lambda: T, g: GammaClass, modulus: T, m: usize) -> Result<T> {
    require_modulus(modulus)?;
    Ok((lambda * mu_class::<T>(g, m)? + class_offset(g, modulus)) * modulus * modulus)
}

/// Van Vleck zeros of order `m = (n − |γ|)/2`, ascending. Empty when
/// `m = 0`; that member is reported by [`class_spectrum`].
pub fn eigenvalues_lambda_class<T: Real>(n: usize, g: GammaClass, modulus: T) -> Result<Vec<T>> {
    let m = g.degree_for(n)?;
    let problem = gamma_to_problem(g, modulus)?;
    if m == 0 {
        return Ok(Vec::new());
    }
    Ok(van_vleck_eigenvalues(&problem, m)?.zeros)
}

/// One class of `Λ_n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassSpectrum<T> {
    pub gamma: GammaClass,
    pub m: usize,
    pub lambdas: Vec<T>,
    pub h_values: Vec<T>,
    /// `h` of the constant-`P₀` member when `m = 0`.
    pub degenerate_h: Option<T>,
}

impl<T> ClassSpectrum<T> {
    /// `|Λ_n^γ|`, counting the `m = 0` member.
    pub fn count(&self) -> usize {
        self.lambdas.len() + usize::from(self.degenerate_h.is_some())
    }
}

pub fn class_spectrum<T: Real>(n: usize, g: GammaClass, modulus: T) -> Result<ClassSpectrum<T>> {
    let m = g.degree_for(n)?;
    let lambdas = eigenvalues_lambda_class(n, g, modulus)?;
    let h_values = lambdas.iter().map(|&l| h_from_lambda(l, g, modulus, m)).collect::<Result<Vec<T>>>()?;
    let degenerate_h = (m == 0).then(|| class_offset(g, modulus));
    Ok(ClassSpectrum { gamma: g, m, lambdas, h_values, degenerate_h })
}

/// `Λ_n^γ` against `Λ_{n+2}^γ` with bounds `(0, k⁻²)`: interlacing of
/// orders `m` and `m + 1`.
pub fn check_class_interlacing<T: Real>(n: usize, g: GammaClass, modulus: T) -> Result<InterlaceVerdict<T>> {
    let m = g.degree_for(n)?;
    if m == 0 {
        return Err(Error::validation("n", format!("class {:?} has m = 0 at n = {n}; its lambda list is empty", g.gamma)));
    }
    let inner = eigenvalues_lambda_class(n, g, modulus)?;
    let outer = eigenvalues_lambda_class(n + 2, g, modulus)?;
    check_interlacing(&inner, &outer, T::zero(), (modulus * modulus).recip())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassInterlacing<T> {
    pub gamma: GammaClass,
    pub verdict: InterlaceVerdict<T>,
}

/// Every class of `Λ_n` with the count and the verdicts for classes with `m ≥ 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LameReport<T> {
    pub n: usize,
    pub modulus: T,
    pub classes: Vec<ClassSpectrum<T>>,
    pub total_count: usize,
    pub class_interlacing: Vec<ClassInterlacing<T>>,
}

pub fn lame_report<T: Real>(n: usize, modulus: T) -> Result<LameReport<T>> {
    let p = LamePhysicalProblem::new(modulus, n)?;
    let classes = admissible_classes(n).into_iter().map(|g| class_spectrum(n, g, p.modulus)).collect::<Result<Vec<_>>>()?;
    let total_count = classes.iter().map(ClassSpectrum::count).sum();
    let class_interlacing = classes
        .iter()
        .filter(|c| c.m >= 1)
        .map(|c| Ok(ClassInterlacing { gamma: c.gamma, verdict: check_class_interlacing(n, c.gamma, modulus)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(LameReport { n, modulus, classes, total_count, class_interlacing })
}

/// `|x|^{γ₁/2}|x−1|^{γ₂/2}|x−k⁻²|^{γ₃/2} P_m(x)`, with `P_m` evaluated as
/// stored (positive multiple of the monic polynomial).
pub fn evaluate_eigenfunction_algebraic<T: Real>(g: GammaClass, s: &StieltjesPolynomial<T>, x: T) -> Result<T> {
    let mut prefactor = T::one();
    for (i, &a) in s.singular_points.iter().enumerate() {
        if g.gamma[i] == 1 {
            if x == a {
                return Err(Error::Domain(format!("eigenfunction has a half-power kink at the singular point {a:e}")));
            }
            prefactor = prefactor * (x - a).abs().sqrt();
        }
    }
    Ok(prefactor * s.eval_derivs(x).0)
}

/// Lamé eigenfunction in product form, `prefactor · Π (x − rᵢ)/scale`, which
/// keeps full relative accuracy where the function is exponentially small.
#[derive(Clone, Debug, PartialEq)]
pub struct LameEigenfunction<T> {
    pub gamma: GammaClass,
    pub roots: Vec<T>,
    pub scale: T,
    pub singular_points: [T; 3],
}

impl<T: Real> LameEigenfunction<T> {
    pub fn new(g: GammaClass, s: &StieltjesPolynomial<T>) -> Result<Self> {
        Ok(Self { gamma: g, roots: s.roots()?, scale: s.scale, singular_points: s.singular_points })
    }

    pub fn eval(&self, x: T) -> Result<T> {
        let mut v = T::one();
        for (i, &a) in self.singular_points.iter().enumerate() {
            if self.gamma.gamma[i] == 1 {
                if x == a {
                    return Err(Error::Domain(format!("eigenfunction has a half-power kink at the singular point {a:e}")));
                }
                v = v * (x - a).abs().sqrt();
            }
        }
        Ok(self.roots.iter().fold(v, |acc, &r| acc * (x - r) / self.scale))
    }
}

/// Step for [`algebraic_residual`] at `x`: 5e-3, shrunk so the stencil stays
/// well inside the distance to the nearest singular point.
pub fn residual_step<T: Real>(x: T, modulus: T) -> T {
    let c = (modulus * modulus).recip();
    let clearance = x.abs().min((x - T::one()).abs()).min((x - c).abs());
    T::c(5e-3).min(clearance / T::c(60.0))
}

/// Relative residual of the algebraic equation for `phi` at `x`, with
/// sixth-order central differences of step `step`, normalized by the sum of
/// the magnitudes of its three terms.
pub fn algebraic_residual<T: Real>(n: usize, h: T, modulus: T, phi: impl Fn(T) -> T, x: T, step: T) -> T {
    let c = (modulus * modulus).recip();
    let f = [-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0].map(|j| phi(x + T::c(j) * step));
    let d1 = (-f[0] + T::c(9.0) * f[1] - T::c(45.0) * f[2] + T::c(45.0) * f[4] - T::c(9.0) * f[5] + f[6]) / (T::c(60.0) * step);
    let d2 = (T::c(2.0) * (f[0] + f[6]) - T::c(27.0) * (f[1] + f[5]) + T::c(270.0) * (f[2] + f[4]) - T::c(490.0) * f[3])
        / (T::c(180.0) * step * step);
    let drift = (x.recip() + (x - T::one()).recip() + (x - c).recip()) / T::c(2.0) * d1;
    let nn = T::from_count(n * (n + 1));
    let potential = (nn * x - c * h) / (T::c(4.0) * x * (x - T::one()) * (x - c)) * f[3];
    (d2 + drift - potential).abs() / (d2.abs() + drift.abs() + potential.abs())
}

#[cfg(test)]
mod tests;
