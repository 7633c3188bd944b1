//! Van Vleck zeros when the singular points are the cube roots of unity.
//!
//! Matching powers of `x` turns the equation into `M·a = ν·a` for the
//! coefficient vector of the Stieltjes polynomial, where `M` is a complex band
//! matrix with one sub- and two super-diagonals. Its eigenvalues are the roots
//! of `det(M − νI)`, evaluated by the Hessenberg determinant recurrence and
//! rooted by Aberth iteration.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interlace::{check_interlacing, InterlaceVerdict};
use crate::linalg::BandMatrix;
use crate::scalar::Real;

/// Angular tolerance for placing a zero on a ray.
pub const RAY_TOL: f64 = 1e-8;
/// Zeros with smaller modulus are the centre zero.
pub const CENTER_TOL: f64 = 1e-10;
/// Largest accepted ODE residual of an eigenpair.
pub const CERTIFY_TOL: f64 = 1e-8;
const ABERTH_MAX_ITER: usize = 500;
const INVERSE_ITERATION_ROUNDS: usize = 4;
const GRID_RADII: usize = 8;
const GRID_ANGLES: usize = 24;

/// `[1, ω, ω²]` with `ω = e^{2πi/3}`.
pub fn cube_roots_of_unity<T: Real>() -> [Complex<T>; 3] {
    let (h, s) = (T::c(-0.5), T::c(3.0).sqrt() / T::c(2.0));
    [Complex::new(T::one(), T::zero()), Complex::new(h, s), Complex::new(h, -s)]
}

/// `j(j − 1 + 2Σρ)`.
fn mu_j<T: Real>(j: usize, rho_sum: T) -> T {
    let j_t = T::from_count(j);
    j_t * (j_t - T::one() + T::c(2.0) * rho_sum)
}

/// The coefficient recurrence `M·a = ν·a`, stored by bands.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquilateralMatrix<T> {
    pub k: usize,
    pub rhos: [T; 3],
    pub mu: T,
    /// `sub[j] = M[j+1][j]`.
    pub sub: Vec<T>,
    pub diag: Vec<Complex<T>>,
    /// `sup1[j] = M[j][j+1]`.
    pub sup1: Vec<Complex<T>>,
    /// `sup2[j] = M[j][j+2]`.
    pub sup2: Vec<T>,
}

fn validate_rhos<T: Real>(rhos: &[T; 3], k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::validation("k", "order must be at least 1"));
    }
    if rhos.iter().any(|r| !r.is_finite() || *r <= T::zero()) {
        return Err(Error::validation("rho", "exponents must be positive and finite"));
    }
    Ok(())
}

/// Equal exponents `ρ` at every vertex.
pub fn build_equilateral_matrix<T: Real>(rho: T, k: usize) -> Result<EquilateralMatrix<T>> {
    build_equilateral_matrix_general([rho; 3], k)
}

/// Exponents `ρ_j` at `α_j = ω^{j−1}`. With `P₁ = Σρ_jα_j`, `P₂ = Σρ_jα_j²`
/// the row `j` reads
/// `ν a_j = (μ_k − μ_{j−1})/μ_k a_{j−1} − 2P₁ j/μ_k a_j − 2P₂(j+1)/μ_k a_{j+1} + (j+1)(j+2)/μ_k a_{j+2}`.
pub fn build_equilateral_matrix_general<T: Real>(rhos: [T; 3], k: usize) -> Result<EquilateralMatrix<T>> {
    validate_rhos(&rhos, k)?;
    let [r1, r2, r3] = rhos;
    let two = T::c(2.0);
    // Written out so that equal exponents give exactly zero.
    let p1 = Complex::new(r1 - (r2 + r3) / two, T::c(3.0).sqrt() / two * (r2 - r3));
    let p2 = p1.conj();
    let rho_sum = r1 + r2 + r3;
    let mu = mu_j(k, rho_sum);
    let sub = (1..=k).map(|j| (mu - mu_j(j - 1, rho_sum)) / mu).collect();
    let diag = (0..=k).map(|j| p1 * (-two * T::from_count(j) / mu)).collect();
    let sup1 = (0..k).map(|j| p2 * (-two * T::from_count(j + 1) / mu)).collect();
    let sup2 = (0..k.saturating_sub(1)).map(|j| T::from_count((j + 1) * (j + 2)) / mu).collect();
    Ok(EquilateralMatrix { k, rhos, mu, sub, diag, sup1, sup2 })
}

impl<T: Real> EquilateralMatrix<T> {
    pub fn dim(&self) -> usize {
        self.k + 1
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        let re = |x: T| Complex::new(x, T::zero());
        match j as isize - i as isize {
            -1 => re(self.sub[j]),
            0 => self.diag[i],
            1 => self.sup1[i],
            2 => re(self.sup2[i]),
            _ => Complex::new(T::zero(), T::zero()),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Complex<T>>> {
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect()
    }

    /// Largest absolute row sum, a bound on every eigenvalue.
    pub fn norm_bound(&self) -> T {
        let n = self.dim();
        (0..n).map(|i| (i.saturating_sub(1)..(i + 3).min(n)).map(|j| self.get(i, j).norm()).sum::<T>()).fold(T::zero(), T::max)
    }

    /// `det(M − νI)` and its `ν`-derivative, by expanding each leading block
    /// along its last column.
    pub fn characteristic(&self, nu: Complex<T>) -> (Complex<T>, Complex<T>) {
        let zero = Complex::new(T::zero(), T::zero());
        let (mut p, mut p1, mut p2) = (Complex::new(T::one(), T::zero()), zero, zero);
        let (mut d, mut d1, mut d2) = (zero, zero, zero);
        for r in 0..self.dim() {
            let shifted = self.diag[r] - nu;
            let mut np = shifted * p;
            let mut nd = shifted * d - p;
            if r >= 1 {
                let c2 = self.sup1[r - 1] * self.sub[r - 1];
                np = np - c2 * p1;
                nd = nd - c2 * d1;
            }
            if r >= 2 {
                let c3 = self.sup2[r - 2] * self.sub[r - 2] * self.sub[r - 1];
                np = np + p2 * c3;
                nd = nd + d2 * c3;
            }
            (p2, p1, p) = (p1, p, np);
            (d2, d1, d) = (d1, d, nd);
        }
        (p, d)
    }

    /// Multiplicity (at most 3) of `ν = 0` as a root of `det(M − νI)`, read
    /// off the Taylor coefficients at 0 against their rounding bounds.
    pub fn zero_root_multiplicity(&self) -> usize {
        type Series<T> = [Complex<T>; 4];
        let zero = Complex::new(T::zero(), T::zero());
        let mul = |a: &Series<T>, b: &Series<T>| {
            let mut c = [zero; 4];
            for i in 0..4 {
                for j in 0..4 - i {
                    c[i + j] = c[i + j] + a[i] * b[j];
                }
            }
            c
        };
        let mul_abs = |a: &[T; 4], b: &[T; 4]| {
            let mut c = [T::zero(); 4];
            for i in 0..4 {
                for j in 0..4 - i {
                    c[i + j] = c[i + j] + a[i] * b[j];
                }
            }
            c
        };
        let scalar = |x: Complex<T>| [x, zero, zero, zero];
        let one = T::one();
        let mut p: Series<T> = scalar(Complex::new(one, T::zero()));
        let (mut p1, mut p2) = ([zero; 4], [zero; 4]);
        let mut b = [one, T::zero(), T::zero(), T::zero()];
        let (mut b1, mut b2) = ([T::zero(); 4], [T::zero(); 4]);
        for r in 0..self.dim() {
            let shifted = [self.diag[r], Complex::new(-one, T::zero()), zero, zero];
            let shifted_abs = [self.diag[r].norm(), one, T::zero(), T::zero()];
            let mut np = mul(&shifted, &p);
            let mut nb = mul_abs(&shifted_abs, &b);
            if r >= 1 {
                let c2 = self.sup1[r - 1] * self.sub[r - 1];
                let t = mul(&scalar(c2), &p1);
                let tb = mul_abs(&[c2.norm(), T::zero(), T::zero(), T::zero()], &b1);
                for i in 0..4 {
                    np[i] = np[i] - t[i];
                    nb[i] = nb[i] + tb[i];
                }
            }
            if r >= 2 {
                let c3 = self.sup2[r - 2] * self.sub[r - 2] * self.sub[r - 1];
                for i in 0..4 {
                    np[i] = np[i] + p2[i] * c3;
                    nb[i] = nb[i] + b2[i] * c3.abs();
                }
            }
            (p2, p1, p) = (p1, p, np);
            (b2, b1, b) = (b1, b, nb);
        }
        let tol = T::c(16.0) * T::from_count(self.dim()) * T::epsilon();
        (0..4).find(|&i| p[i].norm() > tol * b[i]).unwrap_or(3).min(3)
    }
}

/// `det(A)` by Gaussian elimination with partial pivoting.
pub fn dense_determinant<T: Real>(mut a: Vec<Vec<Complex<T>>>) -> Complex<T> {
    let n = a.len();
    let mut det = Complex::new(T::one(), T::zero());
    for j in 0..n {
        let p = (j..n).fold(j, |best, i| if a[i][j].norm() > a[best][j].norm() { i } else { best });
        if a[p][j].norm() == T::zero() {
            return Complex::new(T::zero(), T::zero());
        }
        if p != j {
            a.swap(p, j);
            det = -det;
        }
        det = det * a[j][j];
        for i in j + 1..n {
            let f = a[i][j] / a[j][j];
            for c in j..n {
                let v = a[j][c];
                a[i][c] = a[i][c] - f * v;
            }
        }
    }
    det
}

/// Coefficients of `det(M − νI)`, lowest degree first, interpolated from
/// dense determinants at equally spaced points on the unit circle.
pub fn dense_characteristic_coefficients<T: Real>(m: &EquilateralMatrix<T>) -> Vec<Complex<T>> {
    let n = m.dim();
    let samples = n + 1;
    let radius = T::one();
    let tau = T::c(std::f64::consts::TAU);
    let dense = m.to_dense();
    let values: Vec<Complex<T>> = (0..samples)
        .map(|j| {
            let nu = Complex::from_polar(radius, tau * T::from_count(j) / T::from_count(samples));
            let mut shifted = dense.clone();
            (0..n).for_each(|i| shifted[i][i] = shifted[i][i] - nu);
            dense_determinant(shifted)
        })
        .collect();
    (0..samples)
        .map(|d| {
            let sum = (0..samples).fold(Complex::new(T::zero(), T::zero()), |acc, j| {
                let angle = -tau * T::from_count(j * d % samples) / T::from_count(samples);
                acc + values[j] * Complex::from_polar(T::one(), angle)
            });
            sum / (T::from_count(samples) * radius.powi(d as i32))
        })
        .collect()
}

/// Roots of a polynomial in coefficient form by Weierstrass (Durand–Kerner)
/// iteration. Multiple roots converge only linearly, to about `√ε`.
pub fn weierstrass_roots<T: Real>(coefficients: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
    let lead = *coefficients.last().ok_or_else(|| Error::validation("coefficients", "empty polynomial"))?;
    let monic: Vec<Complex<T>> = coefficients.iter().map(|c| c / lead).collect();
    let n = monic.len() - 1;
    let eval = |z: Complex<T>| monic.iter().rev().fold(Complex::new(T::zero(), T::zero()), |acc, &c| acc * z + c);
    let seed = Complex::new(T::c(0.4), T::c(0.9));
    let mut zs: Vec<Complex<T>> = (0..n).map(|i| seed.powu(i as u32)).collect();
    for _ in 0..5000 {
        let mut largest = T::zero();
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(Complex::new(T::one(), T::zero()), |acc, j| acc * (zs[i] - zs[j]));
            let step = eval(zs[i]) / denom;
            zs[i] = zs[i] - step;
            largest = largest.max(step.norm());
        }
        if largest <= T::epsilon() * T::c(4.0) {
            break;
        }
    }
    if zs.iter().any(|z| !z.norm().is_finite()) {
        return Err(Error::Stalled { solver: "Weierstrass iteration", iterations: 5000 });
    }
    Ok(zs)
}

/// Zeros with their Stieltjes polynomials, before any ray classification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexSpectrum<T> {
    pub k: usize,
    pub rhos: [T; 3],
    pub zeros: Vec<Complex<T>>,
    /// Monic coefficients in `x`, lowest degree first.
    pub coefficients: Vec<Vec<Complex<T>>>,
    pub residuals: Vec<T>,
    /// Multiplicity of the zero eigenvalue split off before rooting.
    pub zero_multiplicity: usize,
}

fn aberth<T: Real>(m: &EquilateralMatrix<T>, deflate: usize) -> Result<Vec<Complex<T>>> {
    let n = m.dim() - deflate;
    if n == 0 {
        return Ok(Vec::new());
    }
    let radius = m.norm_bound().max(T::c(1e-3)) / T::c(2.0);
    let tau = T::c(std::f64::consts::TAU);
    let mut zs: Vec<Complex<T>> = (0..n)
        .map(|j| {
            let t = T::from_count(j) / T::from_count(n);
            Complex::from_polar(radius * (T::one() + T::c(0.1) * t), tau * t + T::c(0.4))
        })
        .collect();
    let deflate_t = T::from_count(deflate);
    let log_derivative = |z: Complex<T>| {
        let (p, dp) = m.characteristic(z);
        if p.norm() == T::zero() {
            return None;
        }
        Some(dp / p - Complex::new(deflate_t, T::zero()) / z)
    };
    let floor = T::c(1e-3);
    let mut done = vec![false; n];
    for _ in 0..ABERTH_MAX_ITER {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let Some(ratio) = log_derivative(zs[i]) else {
                done[i] = true;
                continue;
            };
            let repulsion = (0..n).filter(|&j| j != i).fold(Complex::new(T::zero(), T::zero()), |acc, j| acc + (zs[i] - zs[j]).inv());
            let w = (ratio - repulsion).inv();
            zs[i] = zs[i] - w;
            if w.norm() <= T::c(64.0) * T::epsilon() * zs[i].norm().max(floor) {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            return Ok(zs.into_iter().map(|z| polish(&log_derivative, z)).collect());
        }
    }
    Err(Error::Stalled { solver: "Aberth iteration", iterations: ABERTH_MAX_ITER })
}

/// Newton steps on the deflated determinant, kept only while they shrink it.
fn polish<T: Real>(log_derivative: &impl Fn(Complex<T>) -> Option<Complex<T>>, mut z: Complex<T>) -> Complex<T> {
    for _ in 0..3 {
        match log_derivative(z) {
            Some(r) if r.norm() > T::zero() => {
                let step = r.inv();
                if step.norm() > T::c(1e-6) * z.norm().max(T::c(1e-3)) {
                    break;
                }
                z = z - step;
            }
            _ => break,
        }
    }
    z
}

/// `(S, S', S'')` for coefficients in `x`, lowest degree first.
fn eval_poly<T: Real>(a: &[Complex<T>], x: Complex<T>) -> [Complex<T>; 3] {
    let zero = Complex::new(T::zero(), T::zero());
    let two = Complex::new(T::c(2.0), T::zero());
    a.iter().rev().fold([zero; 3], |[p, dp, ddp], &c| [p * x + c, dp * x + p, ddp * x + dp * two])
}

/// Relative ODE residual of `(ν, S)` on a polar grid over the incircle
/// `|x| ≤ ½`: the largest `|A S'' + B S' − μ(x − ν)S|` over the largest sum of
/// the three magnitudes.
pub fn equilateral_residual<T: Real>(rhos: [T; 3], a: &[Complex<T>], nu: Complex<T>) -> T {
    let k = a.len().saturating_sub(1);
    let roots = cube_roots_of_unity::<T>();
    let mu = mu_j(k, rhos[0] + rhos[1] + rhos[2]);
    let two = T::c(2.0);
    let mut points = vec![Complex::new(T::zero(), T::zero())];
    for i in 1..=GRID_RADII {
        let r = T::c(0.5) * T::from_count(i) / T::from_count(GRID_RADII);
        for j in 0..GRID_ANGLES {
            let t = T::c(std::f64::consts::TAU) * T::from_count(j) / T::from_count(GRID_ANGLES) + T::c(0.1);
            points.push(Complex::from_polar(r, t));
        }
    }
    let (mut num, mut den) = (T::zero(), T::zero());
    for x in points {
        let [s, ds, dds] = eval_poly(a, x);
        let big_a = (x - roots[0]) * (x - roots[1]) * (x - roots[2]);
        let big_b = (0..3).fold(Complex::new(T::zero(), T::zero()), |acc, j| {
            let others = (0..3).filter(|&i| i != j).fold(Complex::new(T::one(), T::zero()), |p, i| p * (x - roots[i]));
            acc + others * (two * rhos[j])
        });
        let t = [big_a * dds, big_b * ds, (x - nu) * s * mu];
        num = num.max((t[0] + t[1] - t[2]).norm());
        den = den.max(t[0].norm() + t[1].norm() + t[2].norm());
    }
    if den == T::zero() {
        T::zero()
    } else {
        num / den
    }
}

/// Monic eigenvector of `M` for `ν` by inverse iteration on the band LU.
fn eigenvector<T: Real>(m: &EquilateralMatrix<T>, nu: Complex<T>) -> (Vec<Complex<T>>, T) {
    let n = m.dim();
    let mut band = BandMatrix::<Complex<T>>::zeros(n, 1, 2);
    for i in 0..n {
        for j in i.saturating_sub(1)..(i + 3).min(n) {
            let v = if i == j { m.get(i, j) - nu } else { m.get(i, j) };
            band.set(i, j, v);
        }
    }
    let lu = band.factor();
    let mut v: Vec<Complex<T>> = (0..n).map(|i| Complex::new(T::one(), T::c(0.25) * T::from_count(i % 5))).collect();
    let mut best = (Vec::new(), T::infinity());
    for _ in 0..INVERSE_ITERATION_ROUNDS {
        v = lu.solve(&v);
        let lead = v[n - 1];
        if lead.norm() == T::zero() || !lead.norm().is_finite() {
            let scale = v.iter().fold(T::zero(), |s, c| s.max(c.norm()));
            v.iter_mut().for_each(|c| *c = *c / scale);
            continue;
        }
        v.iter_mut().for_each(|c| *c = *c / lead);
        let r = equilateral_residual(m.rhos, &v, nu);
        if r < best.1 {
            best = (v.clone(), r);
        }
        if r <= T::c(1e-12) {
            break;
        }
    }
    best
}

/// Certified zeros for arbitrary positive exponents. In double precision the
/// monomial coefficients stay accurate enough to certify up to about k = 60;
/// beyond that certification fails with [`Error::Invariant`].
pub fn complex_zeros<T: Real>(rhos: [T; 3], k: usize) -> Result<ComplexSpectrum<T>> {
    let m = build_equilateral_matrix_general(rhos, k)?;
    let deflate = m.zero_root_multiplicity();
    let mut zeros = vec![Complex::new(T::zero(), T::zero()); deflate];
    zeros.extend(aberth(&m, deflate)?);
    let certify = T::c(CERTIFY_TOL).max(T::c(1e3) * T::epsilon());
    let mut coefficients = Vec::with_capacity(zeros.len());
    let mut residuals = Vec::with_capacity(zeros.len());
    for (i, &nu) in zeros.iter().enumerate() {
        let (a, r) = eigenvector(&m, nu);
        if !(r <= certify) {
            return Err(Error::Invariant(format!("eigenpair {i} at ν = {:e}{:+e}i has ODE residual {r:e}", nu.re, nu.im)));
        }
        coefficients.push(a);
        residuals.push(r);
    }
    Ok(ComplexSpectrum { k, rhos, zeros, coefficients, residuals, zero_multiplicity: deflate })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquilateralSpectrum<T> {
    pub k: usize,
    pub rho: T,
    /// Centre zeros first, then ray 0, 1, 2 by increasing modulus.
    pub zeros: Vec<Complex<T>>,
    /// Ray of each zero: 0, 1, 2 for arguments 0, 2π/3, −2π/3; `None` at the centre.
    pub rays: Vec<Option<u8>>,
    /// The common moduli `λ_n` of the ray triples, ascending.
    pub ray_moduli: Vec<T>,
    pub center_zero_present: bool,
    pub center_multiplicity: usize,
    pub coefficients: Vec<Vec<Complex<T>>>,
    pub residuals: Vec<T>,
}

/// Ray of a zero, or `None` at the centre.
pub fn classify_zero<T: Real>(index: usize, z: Complex<T>) -> Result<Option<u8>> {
    if z.norm() < T::c(CENTER_TOL) {
        return Ok(None);
    }
    let third = T::c(std::f64::consts::TAU / 3.0);
    let theta = z.arg();
    let (ray, offset) = [(0u8, T::zero()), (1, third), (2, -third)]
        .into_iter()
        .map(|(r, a)| (r, (theta - a).abs()))
        .fold((0u8, T::infinity()), |best, c| if c.1 < best.1 { c } else { best });
    if offset > T::c(RAY_TOL) {
        return Err(Error::ClassificationFailure { index, re: z.re.as_f64(), im: z.im.as_f64(), offset: offset.as_f64() });
    }
    Ok(Some(ray))
}

/// Places every zero of `spectrum` on a ray or at the centre.
pub fn classify<T: Real>(spectrum: ComplexSpectrum<T>) -> Result<EquilateralSpectrum<T>> {
    let rays = spectrum.zeros.iter().enumerate().map(|(i, &z)| classify_zero(i, z)).collect::<Result<Vec<_>>>()?;
    let mut order: Vec<usize> = (0..spectrum.zeros.len()).collect();
    order.sort_by(|&i, &j| {
        let key = |i: usize| (rays[i].map_or(-1, |r| r as i32), spectrum.zeros[i].norm());
        let (a, b) = (key(i), key(j));
        a.0.cmp(&b.0).then(a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal))
    });
    let mut per_ray: [Vec<T>; 3] = Default::default();
    for &i in &order {
        if let Some(r) = rays[i] {
            per_ray[r as usize].push(spectrum.zeros[i].norm());
        }
    }
    if per_ray[1].len() != per_ray[0].len() || per_ray[2].len() != per_ray[0].len() {
        return Err(Error::Invariant(format!("rays carry {}, {}, {} zeros", per_ray[0].len(), per_ray[1].len(), per_ray[2].len())));
    }
    let three = T::c(3.0);
    let ray_moduli = (0..per_ray[0].len()).map(|n| (per_ray[0][n] + per_ray[1][n] + per_ray[2][n]) / three).collect();
    let center_multiplicity = rays.iter().filter(|r| r.is_none()).count();
    Ok(EquilateralSpectrum {
        k: spectrum.k,
        rho: spectrum.rhos[0],
        zeros: order.iter().map(|&i| spectrum.zeros[i]).collect(),
        rays: order.iter().map(|&i| rays[i]).collect(),
        ray_moduli,
        center_zero_present: center_multiplicity > 0,
        center_multiplicity,
        coefficients: order.iter().map(|&i| spectrum.coefficients[i].clone()).collect(),
        residuals: order.iter().map(|&i| spectrum.residuals[i]).collect(),
    })
}

/// Certified and classified zeros for equal exponents `ρ`.
pub fn equilateral_zeros<T: Real>(rho: T, k: usize) -> Result<EquilateralSpectrum<T>> {
    classify(complex_zeros([rho; 3], k)?)
}

/// Ray moduli of orders `3k − 1` (inner) and `3k + 2` (outer) with the
/// interlacing verdict on `(0, 1)`. Evidence for a conjecture, not a proof.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadialEvidence<T> {
    pub k: usize,
    pub rho: T,
    pub inner: Vec<T>,
    pub outer: Vec<T>,
    pub verdict: InterlaceVerdict<T>,
}

pub fn radial_evidence<T: Real>(rho: T, k: usize) -> Result<RadialEvidence<T>> {
    if k == 0 {
        return Err(Error::validation("k", "radial conjecture needs k ≥ 1"));
    }
    let inner = equilateral_zeros(rho, 3 * k - 1)?.ray_moduli;
    let outer = equilateral_zeros(rho, 3 * k + 2)?.ray_moduli;
    let verdict = check_interlacing(&inner, &outer, T::zero(), T::one())?;
    Ok(RadialEvidence { k, rho, inner, outer, verdict })
}

pub fn check_radial_conjecture<T: Real>(rho: T, k: usize) -> Result<InterlaceVerdict<T>> {
    radial_evidence(rho, k).map(|e| e.verdict)
}
