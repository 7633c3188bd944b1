//! Real roots of a smooth function with a known root count, by sign changes
//! on a refining Chebyshev grid, bisection and Newton polishing.

use crate::cheb::chebyshev_points;
use crate::scalar::Real;

/// Finds exactly `expected` simple roots of `f` inside the union of `pieces`.
/// Returns `None` if a grid of up to `64·(expected + 2)` points per piece
/// does not resolve that many sign changes.
pub(crate) fn sign_change_roots<T, F, D>(f: F, df: D, pieces: &[(T, T)], expected: usize, xtol: T) -> Option<Vec<T>>
where
    T: Real,
    F: Fn(T) -> T,
    D: Fn(T) -> T,
{
    if expected == 0 {
        return Some(Vec::new());
    }
    let mut m = 4 * (expected + 2);
    while m <= 64 * (expected + 2) {
        let brackets = scan(&f, pieces, m);
        if brackets.len() == expected {
            let mut roots: Vec<T> = brackets.into_iter().map(|(a, b)| refine(&f, &df, a, b, xtol)).collect();
            roots.sort_by(|a, b| a.partial_cmp(b).expect("finite roots"));
            return Some(roots);
        }
        if brackets.len() > expected {
            return None;
        }
        m *= 2;
    }
    None
}

/// Sign-change brackets on a grid; an exact zero yields a degenerate bracket.
fn scan<T: Real>(f: &impl Fn(T) -> T, pieces: &[(T, T)], m: usize) -> Vec<(T, T)> {
    let mut out = Vec::new();
    for &(lo, hi) in pieces {
        let mut xs = vec![lo];
        xs.extend(chebyshev_points(m, lo, hi));
        xs.push(hi);
        let vals: Vec<T> = xs.iter().map(|&x| f(x)).collect();
        for i in 0..xs.len() {
            if vals[i] == T::zero() && i > 0 && i + 1 < xs.len() {
                out.push((xs[i], xs[i]));
            }
            if i + 1 < xs.len() && vals[i] * vals[i + 1] < T::zero() {
                out.push((xs[i], xs[i + 1]));
            }
        }
    }
    out
}

fn refine<T: Real>(f: &impl Fn(T) -> T, df: &impl Fn(T) -> T, mut a: T, mut b: T, xtol: T) -> T {
    if a == b {
        return a;
    }
    let two = T::c(2.0);
    let fa_neg = f(a) < T::zero();
    while b - a > xtol {
        let mid = a + (b - a) / two;
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid);
        if fm == T::zero() {
            return mid;
        }
        if (fm < T::zero()) == fa_neg {
            a = mid;
        } else {
            b = mid;
        }
    }
    // Newton from the midpoint, kept inside the bracket.
    let mut x = a + (b - a) / two;
    for _ in 0..3 {
        let d = df(x);
        if d == T::zero() || !d.is_finite() {
            break;
        }
        let nx = x - f(x) / d;
        if !(nx >= a && nx <= b) {
            break;
        }
        x = nx;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_roots_of_legendre_like_polynomial() {
        let f = |x: f64| (x - 0.1) * (x + 0.5) * (x - 0.9) * (x + 0.99);
        let df = |x: f64| {
            let h = 1e-7;
            (f(x + h) - f(x - h)) / (2.0 * h)
        };
        let r = sign_change_roots(f, df, &[(-1.0, 0.0), (0.0, 1.0)], 4, 1e-15).unwrap();
        for (a, b) in r.iter().zip([-0.99, -0.5, 0.1, 0.9]) {
            assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    fn reports_missing_roots() {
        assert!(sign_change_roots(|x: f64| x * x + 1.0, |x| 2.0 * x, &[(-1.0, 1.0)], 2, 1e-12).is_none());
    }
}
