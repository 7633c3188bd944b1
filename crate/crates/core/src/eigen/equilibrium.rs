//! Roots of a Stieltjes polynomial as the electrostatic equilibrium of `k`
//! unit charges among fixed charges `ρ_l` at the singular points.
//!
//! At each root the equation reduces to
//! `Σ_{i≠j} 1/(x_j − x_i) + Σ_l ρ_l/(x_j − α_l) = 0`, the critical point of
//! `E = −Σ_{i<j} ln|x_i − x_j| − Σ_j Σ_l ρ_l ln|x_j − α_l|`. For a fixed
//! number `n` of charges in `(α₁, α₂)`, `E` is strictly convex, so damped
//! Newton converges from any admissible start. The associated `ν` follows
//! from the roots, which both selects `n` and certifies the result.

use crate::error::{Error, Result};
use crate::problem::mu;
use crate::scalar::Real;

const MAX_NEWTON: usize = 200;

/// Equilibrium with `left` charges in `(α₁, α₂)` and `k − left` in `(α₂, α₃)`.
pub(crate) fn equilibrium<T: Real>(alpha: &[T; 3], rho: &[T; 3], k: usize, left: usize) -> Result<Vec<T>> {
    let [a1, a2, a3] = *alpha;
    let mut x = Vec::with_capacity(k);
    for (count, lo, hi) in [(left, a1, a2), (k - left, a2, a3)] {
        let (c, w) = ((lo + hi) / T::c(2.0), (hi - lo) / T::c(2.0));
        // Descending cosines give ascending points.
        x.extend((0..count).map(|i| c - w * (T::PI() * (T::from_count(i) + T::c(0.5)) / T::from_count(count)).cos()));
    }
    polish(alpha, rho, x)
}

/// Damped Newton from `x`: ascending, distinct, none equal to a singular point.
pub(crate) fn polish<T: Real>(alpha: &[T; 3], rho: &[T; 3], mut x: Vec<T>) -> Result<Vec<T>> {
    let [a1, a2, a3] = *alpha;
    let k = x.len();
    let left = x.partition_point(|&v| v < a2);
    let scale = (a3 - a1).max(a1.abs()).max(a3.abs());
    let mut current = energy(&x, alpha, rho);
    for _ in 0..MAX_NEWTON {
        let (g, h) = gradient_hessian(&x, alpha, rho);
        let mut d = cholesky_solve(h, &g).ok_or_else(|| Error::Invariant("equilibrium Hessian is not positive definite".into()))?;
        for v in &mut d {
            *v = -*v;
        }
        // Largest step keeping every charge strictly inside its gap: no two
        // neighbours in the chain wall, charges, wall may meet.
        let mut t_max = T::infinity();
        for (range, lo, hi) in [(0..left, a1, a2), (left..k, a2, a3)] {
            let chain: Vec<(T, T)> =
                std::iter::once((lo, T::zero())).chain(range.map(|j| (x[j], d[j]))).chain(std::iter::once((hi, T::zero()))).collect();
            for w in chain.windows(2) {
                let closing = w[0].1 - w[1].1;
                if closing > T::zero() {
                    t_max = t_max.min((w[1].0 - w[0].0) / closing);
                }
            }
        }
        let mut t = T::one().min(T::c(0.9) * t_max);
        let slope: T = g.iter().zip(&d).fold(T::zero(), |s, (a, b)| s + *a * *b);
        let step_size = d.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        if step_size <= T::c(4.0) * T::epsilon() * scale {
            return Ok(x);
        }
        loop {
            let trial: Vec<T> = x.iter().zip(&d).map(|(a, b)| *a + t * *b).collect();
            let e = energy(&trial, alpha, rho);
            // Armijo, with rounding slack once the decrease is at the noise level.
            let noise = T::c(64.0) * T::epsilon() * (current.abs() + T::one());
            if e <= current + T::c(1e-4) * t * slope || (e - current).abs() <= noise {
                x = trial;
                current = e;
                break;
            }
            t = t / T::c(2.0);
            if t * step_size <= T::epsilon() * scale {
                return Ok(x);
            }
        }
    }
    Err(Error::Stalled { solver: "equilibrium Newton", iterations: MAX_NEWTON })
}

fn energy<T: Real>(x: &[T], alpha: &[T; 3], rho: &[T; 3]) -> T {
    let mut e = T::zero();
    for (j, &xj) in x.iter().enumerate() {
        for &xi in &x[..j] {
            e -= (xj - xi).abs().ln();
        }
        for l in 0..3 {
            e -= rho[l] * (xj - alpha[l]).abs().ln();
        }
    }
    e
}

fn gradient_hessian<T: Real>(x: &[T], alpha: &[T; 3], rho: &[T; 3]) -> (Vec<T>, Vec<Vec<T>>) {
    let k = x.len();
    let mut g = vec![T::zero(); k];
    let mut h = vec![vec![T::zero(); k]; k];
    for j in 0..k {
        for l in 0..3 {
            let r = T::one() / (x[j] - alpha[l]);
            g[j] -= rho[l] * r;
            h[j][j] += rho[l] * r * r;
        }
        for i in 0..j {
            let r = T::one() / (x[j] - x[i]);
            g[j] -= r;
            g[i] += r;
            h[j][j] += r * r;
            h[i][i] += r * r;
            h[i][j] = -r * r;
            h[j][i] = -r * r;
        }
    }
    (g, h)
}

/// Solves `H y = b` for symmetric positive definite `H`.
fn cholesky_solve<T: Real>(mut h: Vec<Vec<T>>, b: &[T]) -> Option<Vec<T>> {
    let n = b.len();
    for j in 0..n {
        let mut d = h[j][j];
        for p in 0..j {
            d -= h[j][p] * h[j][p];
        }
        if !(d > T::zero()) {
            return None;
        }
        let d = d.sqrt();
        h[j][j] = d;
        for i in j + 1..n {
            let mut s = h[i][j];
            for p in 0..j {
                s -= h[i][p] * h[j][p];
            }
            h[i][j] = s / d;
        }
    }
    let mut y = b.to_vec();
    for i in 0..n {
        for p in 0..i {
            y[i] = y[i] - h[i][p] * y[p];
        }
        y[i] = y[i] / h[i][i];
    }
    for i in (0..n).rev() {
        for p in i + 1..n {
            y[i] = y[i] - h[p][i] * y[p];
        }
        y[i] = y[i] / h[i][i];
    }
    Some(y)
}

/// Largest equilibrium defect, each relative to the sum of its terms' sizes.
#[cfg(test)]
pub(crate) fn equilibrium_residual<T: Real>(alpha: &[T; 3], rho: &[T; 3], x: &[T]) -> T {
    (0..x.len())
        .map(|j| {
            let terms =
                (0..x.len()).filter(|&i| i != j).map(|i| T::one() / (x[j] - x[i])).chain((0..3).map(|l| rho[l] / (x[j] - alpha[l])));
            let (sum, size) = terms.fold((T::zero(), T::zero()), |(s, a), t| (s + t, a + t.abs()));
            sum.abs() / size
        })
        .fold(T::zero(), |m, v| m.max(v))
}

/// The `ν` of the polynomial with these roots, from the equation at the
/// singular point farthest from every root: `A` vanishes there, leaving
/// `B(α_l) S'(α_l) = μ (α_l − ν) S(α_l)`.
pub(crate) fn nu_from_roots<T: Real>(alpha: &[T; 3], rho: &[T; 3], roots: &[T]) -> T {
    let k = roots.len();
    let rho_sum = rho[0] + rho[1] + rho[2];
    let distance = |l: usize| roots.iter().fold(T::infinity(), |m, &r| m.min((r - alpha[l]).abs()));
    let l = (0..3).max_by(|&a, &b| distance(a).partial_cmp(&distance(b)).expect("finite roots")).expect("three points");
    let b_l = (0..3).filter(|&m| m != l).fold(T::c(2.0) * rho[l], |p, m| p * (alpha[l] - alpha[m]));
    let log_derivative = roots.iter().fold(T::zero(), |s, &r| s + T::one() / (alpha[l] - r));
    alpha[l] - b_l / mu(k, &rho_sum) * log_derivative
}

/// Equilibrium whose `ν` matches `nu`, within `nu_tol`, polished from `guess`
/// when that lands on the right split.
///
/// Otherwise, since `ν` increases with the number of charges in `(α₁, α₂)`,
/// the split is found by bisection on that count.
pub(crate) fn roots_for_nu<T: Real>(alpha: &[T; 3], rho: &[T; 3], k: usize, nu: T, nu_tol: T, guess: Option<Vec<T>>) -> Result<Vec<T>> {
    let solve = |n: usize| -> Result<(Vec<T>, T)> {
        let x = equilibrium(alpha, rho, k, n)?;
        let v = nu_from_roots(alpha, rho, &x);
        Ok((x, v))
    };
    let (mut lo, mut hi) = (0usize, k);
    if let Some(x) = guess {
        if let Ok(x) = polish(alpha, rho, x) {
            let v = nu_from_roots(alpha, rho, &x);
            if (v - nu).abs() <= nu_tol {
                return Ok(x);
            }
        }
    }
    while lo < hi {
        let mid = (lo + hi) / 2;
        if solve(mid)?.1 < nu - nu_tol {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let (x, v) = solve(lo)?;
    if (v - nu).abs() > nu_tol {
        return Err(Error::Invariant(format!("no equilibrium of degree {k} reproduces nu = {nu:e} (closest {v:e})")));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_symmetric_root() {
        let (alpha, rho) = ([-1.0, 0.0, 1.0], [0.5; 3]);
        let x = equilibrium(&alpha, &rho, 1, 0).unwrap();
        let r = 1.0 / 3f64.sqrt();
        assert!((x[0] - r).abs() < 1e-15);
        assert!((nu_from_roots(&alpha, &rho, &x) + r).abs() < 1e-15);
    }

    #[test]
    fn equilibrium_residual_vanishes_at_k2_symmetric() {
        // Roots ±r balance when 1/r + r/(r² − 1) = 0, so r² = ½.
        let (alpha, rho): ([f64; 3], [f64; 3]) = ([-1.0, 0.0, 1.0], [0.5; 3]);
        let x = equilibrium(&alpha, &rho, 2, 1).unwrap();
        assert!(equilibrium_residual(&alpha, &rho, &x) < 1e-14);
        assert!(nu_from_roots(&alpha, &rho, &x).abs() < 1e-15);
        assert!((x[0] + 0.5f64.sqrt()).abs() < 4e-15 && (x[1] - 0.5f64.sqrt()).abs() < 4e-15);
    }

    #[test]
    fn nu_increases_with_left_count() {
        let (alpha, rho) = ([-3.0, -2.5, 4.0], [0.05, 3.0, 0.4]);
        for k in [3, 9, 17] {
            let nus: Vec<f64> = (0..=k).map(|n| nu_from_roots(&alpha, &rho, &equilibrium(&alpha, &rho, k, n).unwrap())).collect();
            assert!(nus.windows(2).all(|w| w[0] < w[1]), "{nus:?}");
        }
    }
}
