//! Verdicts on strict interlacing chains
//! `lo < outer₁ < inner₁ < outer₂ < … < inner_m < outer_{m+1} < hi`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::eigen::{van_vleck_eigenvalues, van_vleck_eigenvalues_tol, VanVleckEigenvalues, BISECTION_TOL};
use crate::error::{Error, Result};
use crate::problem::LameProblem;
use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InterlaceVerdict<T> {
    pub holds: bool,
    pub min_gap: T,
    /// Index into the interior chain `outer₁, inner₁, …, outer_{m+1}` of the
    /// first element not strictly above its predecessor.
    pub violation_index: Option<usize>,
    #[serde(rename = "lo_ok")]
    pub lower_bound_ok: bool,
    #[serde(rename = "hi_ok")]
    pub upper_bound_ok: bool,
}

fn chain<T: Copy>(inner: &[T], outer: &[T]) -> Vec<T> {
    let mut c = Vec::with_capacity(inner.len() + outer.len());
    for (i, &o) in outer.iter().enumerate() {
        c.push(o);
        if let Some(&v) = inner.get(i) {
            c.push(v);
        }
    }
    c
}

fn require_lengths(inner: usize, outer: usize) -> Result<()> {
    if outer != inner + 1 {
        return Err(Error::validation("outer", format!("must have exactly one more element than inner ({inner}), got {outer}")));
    }
    Ok(())
}

fn require_sorted<T: Real>(field: &'static str, v: &[T]) -> Result<()> {
    if v.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::validation(field, "must be strictly increasing"));
    }
    Ok(())
}

/// Strict comparisons, no tolerance.
pub fn check_interlacing<T: Real>(inner: &[T], outer: &[T], lo: T, hi: T) -> Result<InterlaceVerdict<T>> {
    require_lengths(inner.len(), outer.len())?;
    require_sorted("inner", inner)?;
    require_sorted("outer", outer)?;
    let c = chain(inner, outer);
    let violation_index = (1..c.len()).find(|&i| !(c[i - 1] < c[i]));
    let min_gap = c.windows(2).fold(T::infinity(), |m, w| m.min(w[1] - w[0]));
    let lower_bound_ok = lo < c[0];
    let upper_bound_ok = c[c.len() - 1] < hi;
    Ok(InterlaceVerdict {
        holds: violation_index.is_none() && lower_bound_ok && upper_bound_ok,
        min_gap,
        violation_index,
        lower_bound_ok,
        upper_bound_ok,
    })
}

/// Outcome of comparing certified brackets rather than point values.
#[derive(Clone, Debug, PartialEq)]
pub enum CertifiedVerdict<T> {
    Decided(InterlaceVerdict<T>),
    /// Brackets of interior chain elements `index` and `index + 1` overlap (or
    /// an end bracket straddles a bound, reported as `index = usize::MAX`).
    Inconclusive {
        index: usize,
    },
}

/// The chain verdict, decided only when neighbouring brackets are disjoint.
pub fn check_interlacing_certified<T: Real>(
    inner: &VanVleckEigenvalues<T>,
    outer: &VanVleckEigenvalues<T>,
    lo: T,
    hi: T,
) -> Result<CertifiedVerdict<T>> {
    require_lengths(inner.zeros.len(), outer.zeros.len())?;
    let brackets = chain(&inner.brackets, &outer.brackets);
    if let Some(i) = (1..brackets.len()).find(|&i| !(brackets[i - 1].1 < brackets[i].0) && !(brackets[i].1 < brackets[i - 1].0)) {
        return Ok(CertifiedVerdict::Inconclusive { index: i - 1 });
    }
    let (first, last) = (brackets[0], brackets[brackets.len() - 1]);
    if (first.0 <= lo && lo <= first.1) || (last.0 <= hi && hi <= last.1) {
        return Ok(CertifiedVerdict::Inconclusive { index: usize::MAX });
    }
    check_interlacing(&inner.zeros, &outer.zeros, lo, hi).map(CertifiedVerdict::Decided)
}

/// Bisection tolerances tried in turn when brackets overlap.
const REFINEMENT: [f64; 3] = [BISECTION_TOL, 1e-15, 0.0];

/// Orders `k` and `k+1` against `(α₁, α₃)`, refining the eigenvalues while
/// their brackets overlap.
pub fn check_consecutive_orders<T: Real>(problem: &LameProblem<T>, k: usize) -> Result<InterlaceVerdict<T>> {
    let [a1, _, a3] = *problem.alpha();
    let mut last = 0;
    for tol in REFINEMENT {
        let inner = van_vleck_eigenvalues_tol(problem, k, T::c(tol))?;
        let outer = van_vleck_eigenvalues_tol(problem, k + 1, T::c(tol))?;
        match check_interlacing_certified(&inner, &outer, a1, a3)? {
            CertifiedVerdict::Decided(v) => return Ok(v),
            CertifiedVerdict::Inconclusive { index } => last = index,
        }
    }
    Err(Error::Inconclusive { index: last })
}

/// Verdicts for each consecutive pair `(k, k+1)`, `k = 1..k_max−1`.
pub fn interlacing_sweep<T: Real>(problem: &LameProblem<T>, k_max: usize) -> Result<Vec<InterlaceVerdict<T>>> {
    if k_max < 2 {
        return Ok(Vec::new());
    }
    let [a1, _, a3] = *problem.alpha();
    let spectra: Vec<VanVleckEigenvalues<T>> =
        (1..=k_max).into_par_iter().map(|k| van_vleck_eigenvalues(problem, k)).collect::<Result<_>>()?;
    spectra
        .windows(2)
        .map(|w| match check_interlacing_certified(&w[0], &w[1], a1, a3)? {
            CertifiedVerdict::Decided(v) => Ok(v),
            CertifiedVerdict::Inconclusive { .. } => check_consecutive_orders(problem, w[0].k),
        })
        .collect()
}

/// Smallest distance between the zeros of orders `k` and `k+1`.
pub fn check_distinct_across_orders<T: Real>(problem: &LameProblem<T>, k: usize) -> Result<T> {
    let a = van_vleck_eigenvalues(problem, k)?;
    let b = van_vleck_eigenvalues(problem, k + 1)?;
    Ok(min_distance(&a.zeros, &b.zeros))
}

/// Smallest `|x − y|` over `x ∈ a`, `y ∈ b`, both sorted.
pub fn min_distance<T: Real>(a: &[T], b: &[T]) -> T {
    let (mut i, mut j) = (0, 0);
    let mut best = T::infinity();
    while i < a.len() && j < b.len() {
        best = best.min((a[i] - b[j]).abs());
        if a[i] < b[j] {
            i += 1;
        } else {
            j += 1;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_one_versus_two() {
        for a in [0.01, 0.5, 0.99] {
            let v = check_interlacing(&[0.0], &[-a, a], -1.0, 1.0).unwrap();
            assert!(v.holds && v.violation_index.is_none());
            assert_eq!(v.min_gap, a);
        }
    }

    #[test]
    fn constructed_counterexample() {
        let v = check_interlacing(&[0.2, 0.4], &[0.1, 0.3, 0.35], 0.0, 1.0).unwrap();
        assert!(!v.holds && v.lower_bound_ok && v.upper_bound_ok);
        assert_eq!(v.violation_index, Some(4));
        assert!(v.min_gap < 0.0);
    }

    #[test]
    fn endpoints_are_strict() {
        let v = check_interlacing(&[0.0], &[-1.0, 0.5], -1.0, 1.0).unwrap();
        assert!(!v.holds && !v.lower_bound_ok && v.upper_bound_ok && v.violation_index.is_none());
        let v = check_interlacing(&[0.0], &[-0.5, 1.0], -1.0, 1.0).unwrap();
        assert!(!v.holds && !v.upper_bound_ok);
    }

    #[test]
    fn length_mismatch_is_rejected() {
        assert!(check_interlacing(&[0.0, 1.0], &[0.5, 2.0], -1.0, 3.0).is_err());
        assert!(check_interlacing::<f64>(&[], &[], -1.0, 3.0).is_err());
    }

    #[test]
    fn min_distance_of_sorted_lists() {
        assert_eq!(min_distance(&[0.0, 1.0, 5.0], &[0.4, 4.5]), 0.4);
        assert_eq!(min_distance(&[1.0, 2.0], &[1.0, 2.0]), 0.0);
    }

    #[test]
    fn serialized_keys() {
        let v = check_interlacing(&[0.0], &[-0.5, 0.5], -1.0, 1.0).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        let mut keys: Vec<&str> = json.as_object().unwrap().keys().map(|s| s.as_str()).collect();
        keys.sort();
        assert_eq!(keys, ["hi_ok", "holds", "lo_ok", "min_gap", "violation_index"]);
    }
}
