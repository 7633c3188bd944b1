//! The order-`(k+1)` tridiagonal matrix whose eigenvalues are the normalized
//! Van Vleck zeros of order `k`.
//!
//! Substituting `S(x) = Σ a_j x^j` into the normalized equation and matching
//! powers of `x` gives, for `j = 0..=k` (with `a₋₁ = a_{k+1} = 0`),
//!
//! ```text
//! (μ_{j−1} − μ_k) a_{j−1} + j[(1−α)(j−1) − g₁] a_j − (j+1) α (j + 2ρ₂) a_{j+1} = −μ_k ν a_j
//! ```
//!
//! Dividing by `−μ_k` turns this into `M a = ν a`. Row `r` (0-based here, so
//! row `r` carries `a_r`) has
//!
//! * sub-diagonal  `(μ_k − μ_{r−1}) / μ_k`,
//! * diagonal      `r[(α−1)(r−1) + g₁] / μ_k`,
//! * super-diagonal `α (r+1)(r + 2ρ₂) / μ_k`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::{mu, NormalizedProblem};
use crate::scalar::{Real, Scalar};

/// Three bands of a tridiagonal matrix of order `diag.len()`.
///
/// `sub[i]` sits at `(i+1, i)` and `sup[i]` at `(i, i+1)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tridiagonal<T> {
    pub sub: Vec<T>,
    pub diag: Vec<T>,
    pub sup: Vec<T>,
}

impl<T: Scalar> Tridiagonal<T> {
    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn trace(&self) -> T {
        self.diag.iter().cloned().fold(T::zero(), |acc, d| acc + d)
    }

    /// `tr(M²) = Σ d_i² + 2 Σ sub_i·sup_i`, without forming `M²`.
    pub fn trace_of_square(&self) -> T {
        let diag_sq = self.diag.iter().fold(T::zero(), |acc, d| acc + d.clone() * d.clone());
        let cross = self.sub.iter().zip(&self.sup).fold(T::zero(), |acc, (l, u)| acc + l.clone() * u.clone());
        diag_sq + T::from_int(2) * cross
    }

    /// `y = M x`.
    pub fn apply(&self, x: &[T]) -> Vec<T> {
        let n = self.order();
        (0..n)
            .map(|i| {
                let mut acc = self.diag[i].clone() * x[i].clone();
                if i > 0 {
                    acc = acc + self.sub[i - 1].clone() * x[i - 1].clone();
                }
                if i + 1 < n {
                    acc = acc + self.sup[i].clone() * x[i + 1].clone();
                }
                acc
            })
            .collect()
    }

    /// `(row, col, value)` for every stored entry, 1-based, row-major.
    pub fn entries(&self) -> Vec<(usize, usize, T)> {
        let n = self.order();
        let mut out = Vec::with_capacity(3 * n);
        for i in 0..n {
            if i > 0 {
                out.push((i + 1, i, self.sub[i - 1].clone()));
            }
            out.push((i + 1, i + 1, self.diag[i].clone()));
            if i + 1 < n {
                out.push((i + 1, i + 2, self.sup[i].clone()));
            }
        }
        out
    }
}

/// `B^(k)` for a normalized problem.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TridiagonalSpectralMatrix<T> {
    pub k: usize,
    pub bands: Tridiagonal<T>,
    pub source: NormalizedProblem<T>,
}

impl<T: Scalar> TridiagonalSpectralMatrix<T> {
    pub fn order(&self) -> usize {
        self.k + 1
    }

    pub fn trace(&self) -> T {
        self.bands.trace()
    }

    pub fn trace_of_square(&self) -> T {
        self.bands.trace_of_square()
    }

    /// `[(k+1)k(k−1)(α−1)/3 + k(k+1)g₁/2] / μ_k`.
    pub fn trace_closed_form(&self) -> T {
        trace_closed_form(&self.source, self.k)
    }
}

pub fn trace_closed_form<T: Scalar>(np: &NormalizedProblem<T>, k: usize) -> T {
    let kk = T::from_count(k);
    let one = T::one();
    let cubic = (kk.clone() + one.clone()) * kk.clone() * (kk.clone() - one.clone()) * (np.alpha.clone() - one) / T::from_int(3);
    let linear = kk.clone() * (kk + T::one()) * np.g1() / T::from_int(2);
    (cubic + linear) / mu(k, &np.rho_sum())
}

/// `μ_k − μ_j = (k − j)(k + j − 1 + 2Σρ)`, factored to avoid cancellation.
fn mu_gap<T: Scalar>(k: usize, j: usize, rho_sum: &T) -> T {
    T::from_int(k as i64 - j as i64) * (T::from_count(k + j) - T::one() + T::from_int(2) * rho_sum.clone())
}

pub(crate) fn build_bands<T: Scalar>(alpha: &T, rho: &[T; 3], k: usize) -> Tridiagonal<T> {
    let rho_sum = rho[0].clone() + rho[1].clone() + rho[2].clone();
    let mu_k = mu(k, &rho_sum);
    let two = T::from_int(2);
    let g1 = -(two.clone() * (rho[1].clone() + rho[2].clone() - alpha.clone() * (rho[0].clone() + rho[1].clone())));
    let one = T::one();

    let diag = (0..=k)
        .map(|r| {
            let rr = T::from_count(r);
            let num = rr.clone() * ((alpha.clone() - one.clone()) * (rr - one.clone()) + g1.clone());
            num / mu_k.clone()
        })
        .collect();
    let sub = (1..=k).map(|r| mu_gap(k, r - 1, &rho_sum) / mu_k.clone()).collect();
    let sup = (0..k)
        .map(|r| {
            let num = alpha.clone() * T::from_count(r + 1) * (T::from_count(r) + two.clone() * rho[1].clone());
            num / mu_k.clone()
        })
        .collect();
    Tridiagonal { sub, diag, sup }
}

/// `dB^(k)/dα`; every entry of `B^(k)` is affine in `α` at fixed `ρ`.
pub(crate) fn alpha_derivative_bands<T: Scalar>(rho: &[T; 3], k: usize) -> Tridiagonal<T> {
    let rho_sum = rho[0].clone() + rho[1].clone() + rho[2].clone();
    let mu_k = mu(k, &rho_sum);
    let two = T::from_int(2);
    let diag = (0..=k)
        .map(|r| {
            let rr = T::from_count(r);
            rr.clone() * (rr - T::one() + two.clone() * (rho[0].clone() + rho[1].clone())) / mu_k.clone()
        })
        .collect();
    let sup = (0..k).map(|r| T::from_count(r + 1) * (T::from_count(r) + two.clone() * rho[1].clone()) / mu_k.clone()).collect();
    Tridiagonal { sub: vec![T::zero(); k], diag, sup }
}

pub fn build_matrix<T: Scalar>(np: &NormalizedProblem<T>, k: usize) -> Result<TridiagonalSpectralMatrix<T>> {
    if k == 0 {
        return Err(Error::validation("k", "order must be at least 1"));
    }
    let bands = build_bands(&np.alpha, &np.rho, k);
    for (entry, band) in [("sub", &bands.sub), ("super", &bands.sup)] {
        if let Some((i, v)) = band.iter().enumerate().find(|(_, v)| !v.is_positive()) {
            let row = if entry == "sub" { i + 2 } else { i + 1 };
            return Err(Error::NonPositiveEntry { entry, row, value: scalar_to_f64(v) });
        }
    }
    Ok(TridiagonalSpectralMatrix { k, bands, source: np.clone() })
}

fn scalar_to_f64<T: Scalar>(v: &T) -> f64 {
    // Diagnostic only; exact types fall back to the sign.
    if v.is_positive() {
        1.0
    } else if *v == T::zero() {
        0.0
    } else {
        -1.0
    }
}

/// `B^(k)(0)` at `ρ = (½, ½, ½)`: lower bidiagonal, eigenvalues on the diagonal.
///
/// With rows carrying `a_0..a_k`, the diagonal is `−r(r+1)/(k(k+2))` for
/// `r = 0..=k`, i.e. `{−j(j−1)/(k(k+2)) : j = 1..=k+1}`. For `k = 1` that is
/// `{0, −2/3}`.
pub fn build_matrix_at_alpha_zero<T: Scalar>(k: usize) -> TridiagonalSpectralMatrix<T> {
    let half = T::from_ratio(1, 2);
    let rho = [half.clone(), half.clone(), half];
    let source = NormalizedProblem { alpha: T::zero(), rho: rho.clone(), scale: T::one(), shift: T::zero() };
    TridiagonalSpectralMatrix { k, bands: build_bands(&T::zero(), &rho, k), source }
}

/// Derivative at `α = 0` of the eigenvalue branch of `B^(k)(α)` that starts at zero,
/// at `ρ = (½, ½, ½)`.
///
/// Uses first-order perturbation theory: `wᵀ A v / wᵀ v` with `w`, `v` the
/// left and right null vectors of `B^(k)(0)` and `A = dB/dα`. Exact over
/// rationals.
pub fn eigenvalue_slope_at_zero<T: Scalar>(k: usize) -> T {
    let half = T::from_ratio(1, 2);
    eigenvalue_slope_at_zero_for(&[half.clone(), half.clone(), half], k)
}

/// [`eigenvalue_slope_at_zero`] for arbitrary exponents. The closed form is `ρ₂/(ρ₂+ρ₃)`.
pub fn eigenvalue_slope_at_zero_for<T: Scalar>(rho: &[T; 3], k: usize) -> T {
    let b0 = build_bands(&T::zero(), rho, k);
    let da = alpha_derivative_bands(rho, k);
    let n = k + 1;

    // B(0) is lower bidiagonal with d_0 = 0 and distinct nonzero d_r for r > 0.
    // Right null vector: d_r v_r + sub_{r−1} v_{r−1} = 0.
    let mut v = vec![T::zero(); n];
    v[0] = T::one();
    for r in 1..n {
        v[r] = -(b0.sub[r - 1].clone() * v[r - 1].clone()) / b0.diag[r].clone();
    }
    // Left null vector: w_r d_r + w_{r+1} sub_r = 0 column by column.
    let mut w = vec![T::zero(); n];
    w[0] = T::one();
    for r in 0..n - 1 {
        w[r + 1] = -(w[r].clone() * b0.diag[r].clone()) / b0.sub[r].clone();
    }
    let av = da.apply(&v);
    let dot = |a: &[T], b: &[T]| a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
    dot(&w, &av) / dot(&w, &v)
}

/// Symmetric tridiagonal matrix similar to a [`TridiagonalSpectralMatrix`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmetrizedMatrix<T> {
    pub diag: Vec<T>,
    pub offdiag: Vec<T>,
    /// `ln d_r` of the diagonal similarity `D` with `T = D⁻¹ M D`, `d_0 = 1`.
    pub log_similarity: Vec<T>,
}

impl<T: Real> SymmetrizedMatrix<T> {
    pub fn order(&self) -> usize {
        self.diag.len()
    }

    /// The scalings `d_r` themselves; may overflow for very large orders.
    pub fn similarity(&self) -> Vec<T> {
        self.log_similarity.iter().map(|l| l.exp()).collect()
    }

    /// Squared off-diagonals, as consumed by Sturm counts.
    pub fn offdiag_sq(&self) -> Vec<T> {
        self.offdiag.iter().map(|e| *e * *e).collect()
    }

    pub fn as_tridiagonal(&self) -> Tridiagonal<T> {
        Tridiagonal { sub: self.offdiag.clone(), diag: self.diag.clone(), sup: self.offdiag.clone() }
    }
}

pub fn symmetrize<T: Real>(m: &TridiagonalSpectralMatrix<T>) -> Result<SymmetrizedMatrix<T>> {
    symmetrize_bands(&m.bands)
}

pub fn symmetrize_bands<T: Real>(bands: &Tridiagonal<T>) -> Result<SymmetrizedMatrix<T>> {
    let n = bands.order();
    let mut offdiag = Vec::with_capacity(n.saturating_sub(1));
    let mut log_similarity = Vec::with_capacity(n);
    log_similarity.push(T::zero());
    for (i, (l, u)) in bands.sub.iter().zip(&bands.sup).enumerate() {
        let prod = *l * *u;
        if !(prod > T::zero()) {
            return Err(Error::Invariant(format!(
                "off-diagonal product sub*super at row {} is {:e}; a valid problem keeps it positive",
                i + 1,
                prod
            )));
        }
        offdiag.push(prod.sqrt());
        let last = log_similarity[i];
        log_similarity.push(last + T::c(0.5) * (l.ln() - u.ln()));
    }
    Ok(SymmetrizedMatrix { diag: bands.diag.clone(), offdiag, log_similarity })
}
