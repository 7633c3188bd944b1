//! Van Vleck zeros as eigenvalues of `B^(k)` and the matching Stieltjes
//! polynomials, each certified by substitution into the differential equation.

mod equilibrium;
mod oracle;
mod pencil;
mod roots;
mod sturm;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cheb::{chebyshev_points, ChebSeries};
use crate::error::{Error, Result};
use crate::linalg::BandMatrix;
use crate::matrix::{build_matrix, symmetrize, SymmetrizedMatrix, TridiagonalSpectralMatrix};
use crate::problem::{mu, LameProblem, NormalizedProblem};
use crate::scalar::Real;

pub use oracle::{char_poly_oracle, char_poly_scaled, sign_change_around, CharPolyValue};

pub(crate) use sturm::{bisect_all, SturmMatrix};

/// Default bisection tolerance, relative to `α₃ − α₁`.
pub const BISECTION_TOL: f64 = 1e-13;
/// Eigenvalues closer than this fraction of `α₃ − α₁` are reported as degenerate.
pub const DEGENERACY_GAP: f64 = 1e-11;
/// Residual above which inverse iteration takes another round.
pub const RESIDUAL_RETRY: f64 = 1e-10;
/// Agreement required between `ν` and its reconstruction from computed roots,
/// relative to `α₃ − α₁`.
pub const ROOT_NU_TOL: f64 = 1e-8;
/// Number of grid points used by [`ode_residual`].
pub const RESIDUAL_GRID: usize = 200;

/// Eigenvalues only, with certified brackets.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VanVleckEigenvalues<T> {
    pub k: usize,
    pub zeros: Vec<T>,
    pub zeros_normalized: Vec<T>,
    /// `[lo, hi]` in original coordinates, each containing its zero.
    pub brackets: Vec<(T, T)>,
}

impl<T: Real> VanVleckEigenvalues<T> {
    pub fn max_bracket_width(&self) -> T {
        self.brackets.iter().fold(T::zero(), |m, &(lo, hi)| m.max(hi - lo))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VanVleckSpectrum<T> {
    pub k: usize,
    pub zeros: Vec<T>,
    pub zeros_normalized: Vec<T>,
    pub brackets: Vec<(T, T)>,
    pub stieltjes: Vec<StieltjesPolynomial<T>>,
    pub residuals: Vec<T>,
}

impl<T: Real> VanVleckSpectrum<T> {
    pub fn eigenvalues(&self) -> VanVleckEigenvalues<T> {
        VanVleckEigenvalues {
            k: self.k,
            zeros: self.zeros.clone(),
            zeros_normalized: self.zeros_normalized.clone(),
            brackets: self.brackets.clone(),
        }
    }

    pub fn max_residual(&self) -> T {
        self.residuals.iter().fold(T::zero(), |m, r| m.max(*r))
    }
}

/// A degree-`k` polynomial solution of the equation for one Van Vleck zero.
///
/// `coefficients` are monic in the normalized variable `x̂ = (x − shift)/scale`.
/// When present, `chebyshev` holds the same polynomial (up to a positive
/// factor) as a Chebyshev series in `x` on `[α₁, α₃]`; it is the
/// representation used for evaluation, since monomial coefficients lose
/// accuracy quickly as the degree grows.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StieltjesPolynomial<T> {
    pub degree: usize,
    pub coefficients: Vec<T>,
    pub associated_nu: T,
    pub scale: T,
    pub shift: T,
    pub singular_points: [T; 3],
    pub exponents: [T; 3],
    pub chebyshev: Option<ChebSeries<T>>,
}

/// Outcome of [`StieltjesPolynomial::check`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StieltjesCheck<T> {
    pub roots: Vec<T>,
    pub derivative_roots: Vec<T>,
    /// `min |z − α₂|` over roots.
    pub distance_to_alpha2: T,
    /// `min |z − ν|` over roots.
    pub distance_to_nu: T,
    pub shah_separation: bool,
}

impl<T: Real> StieltjesPolynomial<T> {
    /// Wraps monic coefficients given in the normalized frame of `problem`.
    pub fn from_normalized_coefficients(problem: &LameProblem<T>, coefficients: Vec<T>, nu: T) -> Result<Self> {
        let np = problem.normalize();
        let s = Self {
            degree: coefficients.len().saturating_sub(1),
            coefficients,
            associated_nu: nu,
            scale: np.scale,
            shift: np.shift,
            singular_points: *problem.alpha(),
            exponents: *problem.rho(),
            chebyshev: None,
        };
        s.require_monic()?;
        Ok(s)
    }

    fn require_monic(&self) -> Result<()> {
        match self.coefficients.last() {
            Some(&lead) if (lead - T::one()).abs() <= T::c(8.0) * T::epsilon() => Ok(()),
            _ => Err(Error::validation("s", "Stieltjes polynomial must be monic and nonzero")),
        }
    }

    /// Monic value at an original-coordinate point, by Horner in `x̂`.
    pub fn evaluate_monic(&self, x: T) -> T {
        let xh = (x - self.shift) / self.scale;
        self.coefficients.iter().rev().fold(T::zero(), |acc, &c| acc * xh + c)
    }

    /// `(S, S', S'')` at `x` in original coordinates, up to one common positive
    /// factor. Uses the Chebyshev form when available.
    pub fn eval_derivs(&self, x: T) -> (T, T, T) {
        match &self.chebyshev {
            Some(s) => {
                let d1 = s.derivative();
                let d2 = d1.derivative();
                (s.eval(x), d1.eval(x), d2.eval(x))
            }
            None => {
                let xh = (x - self.shift) / self.scale;
                let (mut p, mut dp, mut ddp) = (T::zero(), T::zero(), T::zero());
                for &c in self.coefficients.iter().rev() {
                    ddp = ddp * xh + T::c(2.0) * dp;
                    dp = dp * xh + p;
                    p = p * xh + c;
                }
                (p, dp / self.scale, ddp / (self.scale * self.scale))
            }
        }
    }

    /// `S^(order)(x)` from the monomial coefficients.
    fn monomial_derivative(&self, order: usize, x: T) -> T {
        let xh = (x - self.shift) / self.scale;
        let n = self.coefficients.len();
        let mut acc = T::zero();
        for i in (order..n).rev() {
            let falling = (i + 1 - order..=i).fold(T::one(), |f, m| f * T::from_count(m));
            acc = acc * xh + falling * self.coefficients[i];
        }
        acc / self.scale.powi(order as i32)
    }

    fn evaluator(&self) -> Evaluator<'_, T> {
        let cheb = self.chebyshev.as_ref().map(|s| {
            let d1 = s.derivative();
            let d2 = d1.derivative();
            [s.clone(), d1, d2]
        });
        Evaluator { cheb, poly: self }
    }

    fn root_tol(&self) -> T {
        let [a1, _, a3] = self.singular_points;
        T::c(16.0) * T::epsilon() * (a3 - a1).max(a1.abs()).max(a3.abs())
    }

    /// The `k` real roots, ascending, in original coordinates.
    ///
    /// Sign changes of the evaluated polynomial, polished by Newton on the
    /// equilibrium equations the roots satisfy. If the polynomial is below
    /// rounding over part of the interval, sign changes go missing or land on
    /// the wrong side of α₂; the polished roots then fail to reproduce `ν`,
    /// and the split between the two gaps is searched instead.
    pub fn roots(&self) -> Result<Vec<T>> {
        let [a1, a2, a3] = self.singular_points;
        let k = self.degree;
        let nu_tol = T::c(ROOT_NU_TOL) * (a3 - a1);
        let evaluator = self.evaluator();
        let guess = roots::sign_change_roots(|x| evaluator.at(0, x), |x| evaluator.at(1, x), &[(a1, a2), (a2, a3)], k, self.root_tol())
            .filter(|r| r.iter().all(|&x| x > a1 && x < a3 && x != a2));
        equilibrium::roots_for_nu(&self.singular_points, &self.exponents, k, self.associated_nu, nu_tol, guess)
    }

    /// The `k − 1` roots of `S'`, ascending.
    pub fn derivative_roots(&self) -> Result<Vec<T>> {
        Ok(derivative_roots_from(&self.roots()?, self.root_tol()))
    }

    /// Root location, `S(ν) ≠ 0` and Shah separation. Violations are errors.
    pub fn check(&self) -> Result<StieltjesCheck<T>> {
        let [a1, a2, a3] = self.singular_points;
        let roots = self.roots()?;
        let droots = derivative_roots_from(&roots, self.root_tol());
        let tol = self.root_tol();
        let nu = self.associated_nu;
        let nu_tol = T::c(DEGENERACY_GAP) * (a3 - a1);
        let mut distance_to_alpha2 = T::infinity();
        let mut distance_to_nu = T::infinity();
        let mut shah = true;
        for &z in &roots {
            if !(z > a1 && z < a3) {
                return Err(Error::Invariant(format!("Stieltjes root {z:e} outside ({a1:e}, {a3:e})")));
            }
            distance_to_alpha2 = distance_to_alpha2.min((z - a2).abs());
            distance_to_nu = distance_to_nu.min((z - nu).abs());
            // ν is only known to bracket accuracy, so its end of the interval is closed and widened.
            let (lo, hi) = if z < nu { (z, nu + nu_tol) } else { (nu - nu_tol, z) };
            let separated = (a2 > lo && a2 < hi) || droots.iter().any(|&d| d > lo && d < hi);
            shah &= separated;
        }
        if distance_to_alpha2 <= tol {
            return Err(Error::Invariant(format!("Stieltjes root within {distance_to_alpha2:e} of alpha2")));
        }
        if distance_to_nu <= tol {
            return Err(Error::Invariant("the Van Vleck zero is a root of its Stieltjes polynomial".into()));
        }
        if !shah {
            return Err(Error::Invariant("Shah separation fails between a root and the Van Vleck zero".into()));
        }
        Ok(StieltjesCheck { roots, derivative_roots: droots, distance_to_alpha2, distance_to_nu, shah_separation: shah })
    }
}

/// Roots of `S'` for `S` with the given simple real roots: the zeros of
/// `S'/S = Σ 1/(x − x_j)`, one between each pair of neighbours, where the sum
/// falls from +∞ to −∞.
fn derivative_roots_from<T: Real>(roots: &[T], xtol: T) -> Vec<T> {
    let log_derivative = |x: T| roots.iter().fold(T::zero(), |acc, &r| acc + T::one() / (x - r));
    roots
        .windows(2)
        .map(|w| {
            let (mut a, mut b) = (w[0], w[1]);
            loop {
                let mid = a + (b - a) / T::c(2.0);
                if b - a <= xtol || mid <= a || mid >= b {
                    return mid;
                }
                if log_derivative(mid) > T::zero() {
                    a = mid;
                } else {
                    b = mid;
                }
            }
        })
        .collect()
}

/// Derivatives of a Stieltjes polynomial with the Chebyshev derivative series cached.
struct Evaluator<'a, T> {
    cheb: Option<[ChebSeries<T>; 3]>,
    poly: &'a StieltjesPolynomial<T>,
}

impl<T: Real> Evaluator<'_, T> {
    /// `S^(order)(x)` for `order ≤ 3`.
    fn at(&self, order: usize, x: T) -> T {
        match &self.cheb {
            Some(series) if order < 3 => series[order].eval(x),
            Some(series) => series[2].derivative().eval(x),
            None => self.poly.monomial_derivative(order, x),
        }
    }
}

fn bisection_setup<T: Real>(problem: &LameProblem<T>, k: usize) -> Result<(TridiagonalSpectralMatrix<T>, SymmetrizedMatrix<T>)> {
    let np = problem.normalize();
    let m = build_matrix(&np, k)?;
    let s = symmetrize(&m)?;
    Ok((m, s))
}

/// Outward-rounded image of a normalized bracket.
fn denormalize_bracket<T: Real>(np: &NormalizedProblem<T>, lo: T, hi: T) -> (T, T) {
    let map = |v: T| v * np.scale + np.shift;
    let (a, b) = (map(lo), map(hi));
    let slack = T::c(2.0) * T::epsilon() * (a.abs().max(b.abs()) + np.shift.abs());
    (a - slack, b + slack)
}

/// Eigenvalues of `B^(k)` by Sturm bisection, tolerance `rel_tol·(α₃ − α₁)`.
pub fn van_vleck_eigenvalues_tol<T: Real>(problem: &LameProblem<T>, k: usize, rel_tol: T) -> Result<VanVleckEigenvalues<T>> {
    let (_, sym) = bisection_setup(problem, k)?;
    let np = problem.normalize();
    let span_n = T::one() + np.alpha;
    let sturm = SturmMatrix::new(sym.diag.clone(), sym.offdiag_sq());
    let bis = bisect_all(&sturm, rel_tol * span_n)?;
    let gap_min = T::c(DEGENERACY_GAP) * span_n;
    for i in 1..bis.values.len() {
        let gap = bis.values[i] - bis.values[i - 1];
        if gap < gap_min {
            return Err(Error::DegenerateSpectrum { k, index: i, gap: (gap * np.scale).as_f64() });
        }
    }
    let zeros = bis.values.iter().map(|&v| np.denormalize(&v)).collect();
    let brackets = bis.brackets.iter().map(|&(lo, hi)| denormalize_bracket(&np, lo, hi)).collect();
    Ok(VanVleckEigenvalues { k, zeros, zeros_normalized: bis.values, brackets })
}

pub fn van_vleck_eigenvalues<T: Real>(problem: &LameProblem<T>, k: usize) -> Result<VanVleckEigenvalues<T>> {
    van_vleck_eigenvalues_tol(problem, k, T::c(BISECTION_TOL))
}

/// Monic normalized-frame coefficients from the symmetric eigenvector by
/// tridiagonal inverse iteration, undoing the diagonal similarity in log space.
fn monomial_coefficients<T: Real>(sym: &SymmetrizedMatrix<T>, lambda: T) -> Vec<T> {
    let n = sym.order();
    let mut m = BandMatrix::zeros(n, 1, 1);
    for i in 0..n {
        m.set(i, i, sym.diag[i] - lambda);
        if i + 1 < n {
            m.set(i, i + 1, sym.offdiag[i]);
            m.set(i + 1, i, sym.offdiag[i]);
        }
    }
    let lu = m.factor();
    let mut v = vec![T::one(); n];
    for _ in 0..2 {
        v = lu.solve(&v);
        let top = v.iter().fold(T::zero(), |a, b| a.max(b.abs()));
        v.iter_mut().for_each(|x| *x = *x / top);
    }
    let lead_ln = v[n - 1].abs().ln() + sym.log_similarity[n - 1];
    let lead_sign = v[n - 1].signum();
    (0..n)
        .map(|r| {
            if v[r] == T::zero() {
                return T::zero();
            }
            let ln = v[r].abs().ln() + sym.log_similarity[r] - lead_ln;
            v[r].signum() * lead_sign * ln.exp()
        })
        .collect()
}

/// All `k+1` Van Vleck zeros of order `k` with certified Stieltjes polynomials.
pub fn van_vleck_zeros<T: Real>(problem: &LameProblem<T>, k: usize) -> Result<VanVleckSpectrum<T>> {
    let eig = van_vleck_eigenvalues(problem, k)?;
    let (_, sym) = bisection_setup(problem, k)?;
    let np = problem.normalize();
    let pencil = pencil::ChebPencil::new(problem, k);
    let solve_one = |i: usize| -> Result<(StieltjesPolynomial<T>, T)> {
        let nu = eig.zeros[i];
        let shifted = pencil.shifted(nu);
        let mut x = shifted.start();
        let candidate = |x: &[T]| {
            let s = StieltjesPolynomial {
                degree: k,
                coefficients: Vec::new(),
                associated_nu: nu,
                scale: np.scale,
                shift: np.shift,
                singular_points: *problem.alpha(),
                exponents: *problem.rho(),
                chebyshev: Some(shifted.series(x.to_vec())),
            };
            let r = residual_unchecked(problem, &s, nu);
            (s, r)
        };
        // Later rounds are preferred; the first step is the fallback when they drift.
        x = shifted.step(&x);
        let first = candidate(&x);
        let mut best: Option<(StieltjesPolynomial<T>, T)> = None;
        for _ in 0..4 {
            x = shifted.step(&x);
            let (s, r) = candidate(&x);
            if best.as_ref().is_none_or(|(_, rb)| r < *rb) {
                best = Some((s, r));
            }
            if r < T::c(RESIDUAL_RETRY) {
                break;
            }
        }
        let best = best.filter(|(_, r)| *r < T::c(RESIDUAL_RETRY) || *r <= first.1).or(Some(first));
        let (mut s, r) = best.expect("at least one round");
        s.coefficients = monomial_coefficients(&sym, eig.zeros_normalized[i]);
        Ok((s, r))
    };
    let solved: Vec<(StieltjesPolynomial<T>, T)> = if k >= 32 {
        (0..=k).into_par_iter().map(solve_one).collect::<Result<_>>()?
    } else {
        (0..=k).map(solve_one).collect::<Result<_>>()?
    };
    let (stieltjes, residuals) = solved.into_iter().unzip();
    Ok(VanVleckSpectrum { k, zeros: eig.zeros, zeros_normalized: eig.zeros_normalized, brackets: eig.brackets, stieltjes, residuals })
}

fn residual_unchecked<T: Real>(problem: &LameProblem<T>, s: &StieltjesPolynomial<T>, nu: T) -> T {
    let [a1, _, a3] = *problem.alpha();
    let mu_k = mu(s.degree, &problem.rho_sum());
    let ev = s.evaluator();
    let (mut num, mut den) = (T::zero(), T::zero());
    for x in chebyshev_points(RESIDUAL_GRID, a1, a3) {
        let (v, d, dd) = (ev.at(0, x), ev.at(1, x), ev.at(2, x));
        let ta = problem.a_poly(&x) * dd;
        let tb = problem.b_poly(&x) * d;
        let tv = mu_k * (x - nu) * v;
        num = num.max((ta + tb - tv).abs());
        den = den.max(ta.abs() + tb.abs() + tv.abs());
    }
    if den > T::zero() {
        num / den
    } else {
        T::infinity()
    }
}

/// Relative residual of `A S'' + B S' − μ_k (x − ν) S` on a 200-point
/// Chebyshev grid over `[α₁, α₃]`.
pub fn ode_residual<T: Real>(problem: &LameProblem<T>, s: &StieltjesPolynomial<T>, nu: T) -> Result<T> {
    if s.chebyshev.is_none() {
        s.require_monic()?;
    } else if s.chebyshev.as_ref().is_some_and(|c| c.max_abs_coeff() == T::zero()) {
        return Err(Error::validation("s", "zero polynomial"));
    }
    Ok(residual_unchecked(problem, s, nu))
}

#[cfg(test)]
mod tests;
