//! Spectral polynomials `p_{k+1}(x) = Π (x − ν_i^(k))`, their candidate
//! three-term recurrence coefficients, trace asymptotics and the limiting
//! zero densities.
//!
//! Power sums of zeros are always taken from traces of `B^(k)`, never from
//! computed roots.

mod density;

use serde::{Deserialize, Serialize};

use crate::eigen::van_vleck_eigenvalues;
use crate::error::{Error, Result};
use crate::matrix::build_matrix;
use crate::problem::LameProblem;
use crate::scalar::{two_prod, two_sum, Real};

pub use density::{
    density_arcsine, density_rho_a, density_rows, heun_residual, ks_rho_vs_arcsine, Arcsine, ArcsineVariant, DensityRow, RhoA,
    ALPHA2_EXCLUSION, HEUN_CLEARANCE,
};

/// Orders used for trace fits when none are given.
pub const DEFAULT_TRACE_ORDERS: [usize; 5] = [125, 250, 500, 1000, 2000];
/// Fitted slopes must match the closed forms this closely once `k_max ≥ 1000`.
pub const SLOPE_REL_TOL: f64 = 1e-6;
/// Points of the Chebyshev grid for the recurrence residual.
pub const RECURRENCE_GRID: usize = 100;

/// Monic coefficients, ascending, of `Π (x − zᵢ)` for strictly sorted `zeros`.
///
/// Factors are applied in sorted order; each product and sum is carried
/// with its rounding error, which is folded back in at the end.
pub fn build_spectral_poly<T: Real>(zeros: &[T]) -> Result<Vec<T>> {
    if zeros.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::validation("zeros", "must be strictly increasing"));
    }
    let n = zeros.len();
    let mut hi = vec![T::zero(); n + 1];
    let mut lo = vec![T::zero(); n + 1];
    hi[0] = T::one();
    for (d, &z) in zeros.iter().enumerate() {
        // Multiply the degree-d polynomial by (x − z), top coefficient first.
        hi[d + 1] = hi[d];
        lo[d + 1] = lo[d];
        for i in (1..=d).rev() {
            let (p, ep) = two_prod(-z, hi[i]);
            let (s, es) = two_sum(hi[i - 1], p);
            lo[i] = lo[i - 1] - z * lo[i] + ep + es;
            hi[i] = s;
        }
        let (p, ep) = two_prod(-z, hi[0]);
        lo[0] = -z * lo[0] + ep;
        hi[0] = p;
    }
    Ok(hi.iter().zip(&lo).map(|(h, l)| *h + *l).collect())
}

/// `p(x)` from its roots, in product form.
pub fn eval_from_roots<T: Real>(roots: &[T], x: T) -> T {
    roots.iter().fold(T::one(), |p, &r| p * (x - r))
}

/// `(Σν, Σν²)` over the order-`k` zeros, from `tr B` and `tr B²`.
pub fn power_sums<T: Real>(problem: &LameProblem<T>, k: usize) -> Result<(T, T)> {
    let np = problem.normalize();
    let m = build_matrix(&np, k)?;
    let (t1, t2) = (m.trace(), m.trace_of_square());
    let (s, c) = (np.scale, np.shift);
    let n = T::from_count(k + 1);
    Ok((s * t1 + n * c, s * s * t2 + T::c(2.0) * s * c * t1 + n * c * c))
}

fn require_recurrence_index(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::validation("n", format!("recurrence coefficients need n >= 3 (order n-2 >= 1), got {n}")));
    }
    Ok(())
}

/// `a_n = Σν^(n−1) − Σν^(n−2)`.
pub fn recurrence_a<T: Real>(problem: &LameProblem<T>, n: usize) -> Result<T> {
    require_recurrence_index(n)?;
    Ok(power_sums(problem, n - 1)?.0 - power_sums(problem, n - 2)?.0)
}

/// `b_n = −a_n²/2 + [Σ(ν^(n−1))² − Σ(ν^(n−2))²]/2`.
pub fn recurrence_b<T: Real>(problem: &LameProblem<T>, n: usize) -> Result<T> {
    require_recurrence_index(n)?;
    let (s1, q1) = power_sums(problem, n - 1)?;
    let (s0, q0) = power_sums(problem, n - 2)?;
    let a = s1 - s0;
    Ok((q1 - q0 - a * a) / T::c(2.0))
}

/// `(α₁ + α₂ + α₃)/3`.
pub fn a_limit<T: Real>(problem: &LameProblem<T>) -> T {
    let [a1, a2, a3] = *problem.alpha();
    (a1 + a2 + a3) / T::c(3.0)
}

/// `(2/45)(Σαᵢ² − Σ_{i<j} αᵢαⱼ)`, positive for distinct points.
pub fn b_limit<T: Real>(problem: &LameProblem<T>) -> T {
    let [a1, a2, a3] = *problem.alpha();
    // Σαᵢ² − Σαᵢαⱼ = ½Σ(αᵢ − αⱼ)², free of cancellation.
    let d = (a2 - a1).powi(2) + (a3 - a2).powi(2) + (a3 - a1).powi(2);
    T::c(2.0 / 45.0) * d / T::c(2.0)
}

/// Growth rate of `Σν` in `k`.
pub fn first_moment_slope<T: Real>(problem: &LameProblem<T>) -> T {
    a_limit(problem)
}

/// Growth rate of `Σν²` in `k`: `Σαᵢ²/5 + (2/15)Σ_{i<j} αᵢαⱼ`.
pub fn second_moment_slope<T: Real>(problem: &LameProblem<T>) -> T {
    let [a1, a2, a3] = *problem.alpha();
    (a1 * a1 + a2 * a2 + a3 * a3) / T::c(5.0) + T::c(2.0 / 15.0) * (a1 * a2 + a2 * a3 + a1 * a3)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticFit<T> {
    pub slope: T,
    pub intercept: T,
    /// Log-log slope of `|y_k − slope·k − intercept|`; `−∞` when the
    /// remainder is below rounding at every order.
    pub residual_decay_exponent: T,
}

impl<T: Real> AsymptoticFit<T> {
    pub fn accepted(&self) -> bool {
        self.accepted_at(T::c(-0.8))
    }

    pub fn accepted_at(&self, max_exponent: T) -> bool {
        self.residual_decay_exponent <= max_exponent
    }
}

/// Least squares in the basis `k/k_max, 1, k_min/k` plus `(k_min/k)²` when
/// there are at least four orders.
fn fit_with_remainder<T: Real>(ks: &[usize], ys: &[T]) -> Result<(T, T)> {
    let k_max = T::from_count(*ks.last().expect("nonempty"));
    let k_min = T::from_count(ks[0]);
    let basis = |k: usize| {
        let r = k_min / T::from_count(k);
        [T::from_count(k) / k_max, T::one(), r, r * r]
    };
    let c = if ks.len() >= 4 {
        least_squares::<T, 4>(ks.iter().map(|&k| basis(k)), ys)?.to_vec()
    } else {
        least_squares::<T, 3>(
            ks.iter().map(|&k| {
                let b = basis(k);
                [b[0], b[1], b[2]]
            }),
            ys,
        )?
        .to_vec()
    };
    Ok((c[0] / k_max, c[1]))
}

fn least_squares<T: Real, const N: usize>(rows: impl Iterator<Item = [T; N]>, ys: &[T]) -> Result<[T; N]> {
    let mut ata = [[T::zero(); N]; N];
    let mut aty = [T::zero(); N];
    for (r, &y) in rows.zip(ys) {
        for i in 0..N {
            aty[i] += r[i] * y;
            for j in 0..N {
                ata[i][j] += r[i] * r[j];
            }
        }
    }
    solve(ata, aty).ok_or_else(|| Error::validation("k_list", "orders do not determine a fit"))
}

fn solve<T: Real, const N: usize>(mut a: [[T; N]; N], mut b: [T; N]) -> Option<[T; N]> {
    for col in 0..N {
        let piv = (col..N).max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())?;
        if a[piv][col] == T::zero() {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..N {
            let f = a[row][col] / a[col][col];
            for j in col..N {
                let v = a[col][j];
                a[row][j] -= f * v;
            }
            let v = b[col];
            b[row] -= f * v;
        }
    }
    let mut x = [T::zero(); N];
    for i in (0..N).rev() {
        let s = (i + 1..N).fold(b[i], |s, j| s - a[i][j] * x[j]);
        x[i] = s / a[i][i];
    }
    Some(x)
}

/// Fits `ys ≈ slope·k + intercept + c/k + d/k²` and measures how fast the remainder decays.
pub fn fit_series<T: Real>(ks: &[usize], ys: &[T]) -> Result<AsymptoticFit<T>> {
    let (slope, intercept) = fit_with_remainder(ks, ys)?;
    let noise = T::c(1e3) * T::epsilon() * ys.iter().fold(T::zero(), |m, y| m.max(y.abs()));
    let pts: Vec<(T, T)> = ks
        .iter()
        .zip(ys)
        .map(|(&k, &y)| (T::from_count(k), (y - slope * T::from_count(k) - intercept).abs()))
        .filter(|&(_, r)| r > noise)
        .map(|(k, r)| (k.ln(), r.ln()))
        .collect();
    let residual_decay_exponent = if pts.len() < 2 {
        T::neg_infinity()
    } else {
        let n = T::from_count(pts.len());
        let (mx, my) = pts.iter().fold((T::zero(), T::zero()), |(a, b), &(x, y)| (a + x / n, b + y / n));
        let (sxy, sxx) = pts.iter().fold((T::zero(), T::zero()), |(a, b), &(x, y)| (a + (x - mx) * (y - my), b + (x - mx) * (x - mx)));
        sxy / sxx
    };
    Ok(AsymptoticFit { slope, intercept, residual_decay_exponent })
}

/// One row of trace data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow<T> {
    pub k: usize,
    pub sum_nu: T,
    pub sum_nu_sq: T,
}

pub fn trace_rows<T: Real>(problem: &LameProblem<T>, k_list: &[usize]) -> Result<Vec<TraceRow<T>>> {
    k_list.iter().map(|&k| power_sums(problem, k).map(|(sum_nu, sum_nu_sq)| TraceRow { k, sum_nu, sum_nu_sq })).collect()
}

/// Fits `Σν` and `Σν²` as `slope·k + intercept + O(1/k)` over `k_list`.
///
/// When the largest order is at least 1000, both slopes must agree with
/// [`first_moment_slope`] and [`second_moment_slope`] to [`SLOPE_REL_TOL`],
/// relative to the closed form or to `(α₃ − α₁)^p` when that is larger.
pub fn trace_asymptotics<T: Real>(problem: &LameProblem<T>, k_list: &[usize]) -> Result<(AsymptoticFit<T>, AsymptoticFit<T>)> {
    if k_list.len() < 3 {
        return Err(Error::validation("k_list", format!("need at least 3 orders, got {}", k_list.len())));
    }
    if k_list[0] == 0 || k_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::validation("k_list", "orders must be positive and strictly increasing"));
    }
    let rows = trace_rows(problem, k_list)?;
    let first = fit_series(k_list, &rows.iter().map(|r| r.sum_nu).collect::<Vec<_>>())?;
    let second = fit_series(k_list, &rows.iter().map(|r| r.sum_nu_sq).collect::<Vec<_>>())?;
    if *k_list.last().unwrap() >= 1000 {
        let span = problem.span();
        for (name, fit, exact, scale) in
            [("first", &first, first_moment_slope(problem), span), ("second", &second, second_moment_slope(problem), span * span)]
        {
            let tol = T::c(SLOPE_REL_TOL) * exact.abs().max(scale);
            if !((fit.slope - exact).abs() <= tol) {
                return Err(Error::Invariant(format!(
                    "{name}-moment slope {:e} differs from {:e} by more than {:e}",
                    fit.slope, exact, tol
                )));
            }
        }
    }
    Ok((first, second))
}

/// One row of recurrence data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceRow<T> {
    pub n: usize,
    pub a_n: T,
    pub b_n: T,
}

pub fn recurrence_rows<T: Real>(problem: &LameProblem<T>, n_list: &[usize]) -> Result<Vec<RecurrenceRow<T>>> {
    n_list.iter().map(|&n| Ok(RecurrenceRow { n, a_n: recurrence_a(problem, n)?, b_n: recurrence_b(problem, n)? })).collect()
}

/// Orders used to extrapolate the recurrence limits when none are given.
pub const DEFAULT_LIMIT_ORDERS: [usize; 4] = [125, 250, 500, 1000];

/// `(a_∞, b_∞)` extrapolated from `a_n`, `b_n` over `n_list` as
/// `L + c/n + d/n²`.
pub fn fitted_recurrence_limits<T: Real>(problem: &LameProblem<T>, n_list: &[usize]) -> Result<(T, T)> {
    if n_list.len() < 3 || n_list[0] < 3 || n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::validation("n_list", "need at least 3 strictly increasing indices, each >= 3"));
    }
    let rows = recurrence_rows(problem, n_list)?;
    let n_min = T::from_count(n_list[0]);
    let basis: Vec<[T; 3]> = n_list
        .iter()
        .map(|&n| {
            let r = n_min / T::from_count(n);
            [T::one(), r, r * r]
        })
        .collect();
    let a = least_squares::<_, 3>(basis.iter().copied(), &rows.iter().map(|r| r.a_n).collect::<Vec<_>>())?;
    let b = least_squares::<_, 3>(basis.iter().copied(), &rows.iter().map(|r| r.b_n).collect::<Vec<_>>())?;
    Ok((a[0], b[0]))
}

/// Chebyshev points of the first kind on `[lo, hi]`, ascending.
pub fn chebyshev_grid<T: Real>(lo: T, hi: T, n: usize) -> Vec<T> {
    let (c, w) = ((lo + hi) / T::c(2.0), (hi - lo) / T::c(2.0));
    (0..n).map(|i| c - w * (T::PI() * (T::from_count(i) + T::c(0.5)) / T::from_count(n)).cos()).collect()
}

/// `max |p_n − (x − a_n)p_{n−1} + b_n p_{n−2}| / max |p_n|` on a
/// [`RECURRENCE_GRID`]-point Chebyshev grid of `[α₁, α₃]`, with each `p`
/// evaluated from its zeros.
///
/// An orthogonal family would make this vanish.
pub fn recurrence_residual<T: Real>(problem: &LameProblem<T>, n: usize) -> Result<T> {
    require_recurrence_index(n)?;
    if n < 4 {
        // p_{n−2} would come from order n−3 = 0, which has no zeros.
        return Err(Error::validation("n", format!("recurrence residual needs n >= 4, got {n}")));
    }
    let a = recurrence_a(problem, n)?;
    let b = recurrence_b(problem, n)?;
    let z2 = van_vleck_eigenvalues(problem, n - 1)?.zeros;
    let z1 = van_vleck_eigenvalues(problem, n - 2)?.zeros;
    let z0 = van_vleck_eigenvalues(problem, n - 3)?.zeros;
    let [a1, _, a3] = *problem.alpha();
    Ok(recurrence_residual_from_roots([&z2, &z1, &z0], a, b, a1, a3))
}

/// The residual of [`recurrence_residual`] for monic polynomials given by
/// their roots `[p_n, p_{n−1}, p_{n−2}]` on the grid of `[lo, hi]`.
pub fn recurrence_residual_from_roots<T: Real>(roots: [&[T]; 3], a: T, b: T, lo: T, hi: T) -> T {
    let (mut res, mut norm) = (T::zero(), T::zero());
    for x in chebyshev_grid(lo, hi, RECURRENCE_GRID) {
        let pn = eval_from_roots(roots[0], x);
        let r = pn - (x - a) * eval_from_roots(roots[1], x) + b * eval_from_roots(roots[2], x);
        res = res.max(r.abs());
        norm = norm.max(pn.abs());
    }
    res / norm
}

/// `p_2 … p_{n_max}` with the candidate recurrence coefficients `a_n`, `b_n`
/// for `n = 3..=n_max`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralPolynomialSequence<T> {
    pub problem: LameProblem<T>,
    /// `polys[i]` is `p_{i+2}`: monic, ascending coefficients, degree `i + 2`.
    pub polys: Vec<Vec<T>>,
    /// `a_seq[i]` is `a_{i+3}`.
    pub a_seq: Vec<T>,
    /// `b_seq[i]` is `b_{i+3}`.
    pub b_seq: Vec<T>,
}

impl<T: Real> SpectralPolynomialSequence<T> {
    pub const FIRST_DEGREE: usize = 2;

    pub fn new(problem: &LameProblem<T>, n_max: usize) -> Result<Self> {
        if n_max < Self::FIRST_DEGREE {
            return Err(Error::validation("n_max", format!("must be at least 2, got {n_max}")));
        }
        let polys = (Self::FIRST_DEGREE..=n_max)
            .map(|m| build_spectral_poly(&van_vleck_eigenvalues(problem, m - 1)?.zeros))
            .collect::<Result<Vec<_>>>()?;
        let a_seq = (3..=n_max).map(|n| recurrence_a(problem, n)).collect::<Result<Vec<_>>>()?;
        let b_seq = (3..=n_max).map(|n| recurrence_b(problem, n)).collect::<Result<Vec<_>>>()?;
        Ok(Self { problem: problem.clone(), polys, a_seq, b_seq })
    }

    /// `p_m`, if stored.
    pub fn poly(&self, degree: usize) -> Option<&[T]> {
        degree.checked_sub(Self::FIRST_DEGREE).and_then(|i| self.polys.get(i)).map(Vec::as_slice)
    }
}
