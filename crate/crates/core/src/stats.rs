//! Kolmogorov distances.

use crate::scalar::Real;

/// `sup |F_n − F|` for the empirical CDF of `samples` (sorted ascending).
pub fn ks_empirical<T: Real>(samples: &[T], mut cdf: impl FnMut(T) -> T) -> T {
    let n = T::from_count(samples.len());
    samples.iter().enumerate().fold(T::zero(), |d, (i, &x)| {
        let f = cdf(x);
        let below = T::from_count(i) / n;
        let above = T::from_count(i + 1) / n;
        d.max((f - below).abs()).max((above - f).abs())
    })
}

/// `max |F − G|` over `grid`; a lower bound for the sup distance of two
/// continuous CDFs that tightens as the grid is refined.
pub fn ks_on_grid<T: Real>(grid: &[T], mut f: impl FnMut(T) -> T, mut g: impl FnMut(T) -> T) -> T {
    grid.iter().fold(T::zero(), |d, &x| d.max((f(x) - g(x)).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_grid_samples() {
        // Midpoints of n equal cells: distance exactly 1/(2n).
        let n = 10;
        let xs: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect();
        let d = ks_empirical(&xs, |x| x.clamp(0.0, 1.0));
        assert!((d - 0.05).abs() < 1e-15);
    }

    #[test]
    fn shifted_uniforms() {
        let grid: Vec<f64> = (0..=100).map(|i| i as f64 / 50.0 - 0.5).collect();
        let d = ks_on_grid(&grid, |x| x.clamp(0.0, 1.0), |x| (x - 0.25).clamp(0.0, 1.0));
        assert!((d - 0.25).abs() < 1e-15);
    }
}
