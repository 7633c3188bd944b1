use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::eigen::van_vleck_zeros;

fn class(g: [u8; 3]) -> GammaClass {
    GammaClass::new(g).unwrap()
}

#[test]
fn classes_and_parity() {
    assert_eq!(GammaClass::ALL.len(), 8);
    assert_eq!(GammaClass::ALL.iter().map(|g| g.weight()).sum::<usize>(), 12);
    assert!(GammaClass::new([0, 2, 0]).is_err());
    assert_eq!(class([1, 1, 1]).degree_for(5).unwrap(), 1);
    assert!(matches!(class([1, 0, 0]).degree_for(4), Err(Error::Parity { n: 4, gamma_weight: 1 })));
    assert!(class([1, 1, 1]).degree_for(1).is_err());
    assert_eq!(admissible_classes(2).len(), 4);
    assert_eq!(admissible_classes(1).len(), 3);
    assert_eq!(admissible_classes(3).len(), 4);
}

#[test]
fn exponent_map() {
    let p = gamma_to_problem(class([0, 0, 0]), 0.5).unwrap();
    assert_eq!(p.alpha(), &[0.0, 1.0, 4.0]);
    assert_eq!(p.rho(), &[0.25; 3]);
    for g in GammaClass::ALL {
        let p = gamma_to_problem(g, 0.7).unwrap();
        let w = g.weight() as f64;
        assert!((p.rho_sum() - (w + 1.5) / 2.0).abs() < 1e-15);
        for m in 1..6 {
            let m_f = m as f64;
            assert!((mu(m, &p.rho_sum()) - m_f * (m_f + w + 0.5)).abs() < 1e-12);
        }
    }
    assert!(gamma_to_problem(class([0, 0, 0]), 1.0).is_err());
    assert!(gamma_to_problem(class([0, 0, 0]), 0.0).is_err());
}

#[test]
fn lambda_h_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let g = GammaClass::ALL[rng.gen_range(0..8)];
        let modulus: f64 = rng.gen_range(0.05..0.95);
        let m = rng.gen_range(1..30);
        let h: f64 = rng.gen_range(-10.0..50.0);
        let back = h_from_lambda(lambda_from_h(h, g, modulus, m).unwrap(), g, modulus, m).unwrap();
        assert!((back - h).abs() <= 1e-13 * h.abs().max(1.0));
        let back = h_from_lambda_printed(lambda_from_h_printed(h, g, modulus, m).unwrap(), g, modulus, m).unwrap();
        assert!((back - h).abs() <= 1e-13 * h.abs().max(1.0));
    }
    // Printed form for γ = 0 is k⁻²h/(m(m+½)).
    let l: f64 = lambda_from_h_printed(3.0, class([0, 0, 0]), 0.5, 2).unwrap();
    assert!((l - 4.0 * 3.0 / 5.0).abs() < 1e-15);
    assert!(lambda_from_h(1.0, class([0, 0, 0]), 0.5, 0).is_err());
}

/// Eigenvalues of `w'' + (h − n(n+1)k² sn²)w = 0` from the products of sn,
/// cn, dn that solve it for n = 1, 2.
#[test]
fn classical_low_degree_eigenvalues() {
    for k in [0.3, 0.5, 0.9] {
        let k2: f64 = k * k;
        let n1: Vec<(GammaClass, f64)> = vec![(class([1, 0, 0]), 1.0 + k2), (class([0, 1, 0]), 1.0), (class([0, 0, 1]), k2)];
        for (g, h) in n1 {
            let s = class_spectrum(1, g, k).unwrap();
            assert!(s.lambdas.is_empty());
            assert!((s.degenerate_h.unwrap() - h).abs() < 1e-15);
        }
        let n2 = [(class([1, 1, 0]), 4.0 + k2), (class([1, 0, 1]), 1.0 + 4.0 * k2), (class([0, 1, 1]), 1.0 + k2)];
        for (g, h) in n2 {
            assert!((class_spectrum(2, g, k).unwrap().degenerate_h.unwrap() - h).abs() < 1e-14);
        }
        let s = class_spectrum(2, class([0, 0, 0]), k).unwrap();
        let root = 2.0 * (1.0 - k2 + k2 * k2).sqrt();
        let expected = [2.0 * (1.0 + k2) - root, 2.0 * (1.0 + k2) + root];
        for (h, e) in s.h_values.iter().zip(expected) {
            assert!((h - e).abs() < 1e-12 * e, "k = {k}: {h} vs {e}");
        }
    }
}

#[test]
fn counts_sum_to_2n_plus_1() {
    for modulus in [0.3, 0.5, 0.9] {
        for n in 1..=12 {
            let r = lame_report(n, modulus).unwrap();
            assert_eq!(r.total_count, 2 * n + 1, "n = {n}");
            for c in &r.classes {
                assert!(c.lambdas.iter().all(|&l| l > 0.0 && l < 1.0 / (modulus * modulus)));
                assert!(c.h_values.windows(2).all(|w| w[0] < w[1]));
            }
            assert!(r.class_interlacing.iter().all(|e| e.verdict.holds));
        }
    }
    let s = class_spectrum(6, class([0, 0, 0]), 0.5).unwrap();
    assert_eq!(s.count(), 6 / 2 + 1);
}

#[test]
fn class_interlacing_examples() {
    assert!(check_class_interlacing(2, class([0, 0, 0]), 0.5).unwrap().holds);
    assert!(check_class_interlacing(5, class([1, 1, 1]), 0.9).unwrap().holds);
    assert!(matches!(check_class_interlacing(3, class([0, 0, 0]), 0.5), Err(Error::Parity { .. })));
    assert!(check_class_interlacing(3, class([1, 1, 1]), 0.5).is_err());
}

#[test]
fn eigenfunctions_solve_the_algebraic_equation() {
    for modulus in [0.3, 0.5, 0.9] {
        let c = 1.0 / (modulus * modulus);
        for n in 2..=9 {
            for g in admissible_classes(n) {
                let m = g.degree_for(n).unwrap();
                if m == 0 {
                    continue;
                }
                let p = gamma_to_problem(g, modulus).unwrap();
                let spectrum = van_vleck_zeros(&p, m).unwrap();
                for (lambda, s) in spectrum.zeros.iter().zip(&spectrum.stieltjes) {
                    let h = h_from_lambda(*lambda, g, modulus, m).unwrap();
                    let phi = LameEigenfunction::new(g, s).unwrap();
                    for x in [0.3, 0.7] {
                        let direct: f64 = evaluate_eigenfunction_algebraic(g, s, x).unwrap() / s.eval_derivs(x).0 * s.evaluate_monic(x);
                        assert!((phi.eval(x).unwrap() - direct).abs() < 1e-9 * direct.abs().max(1.0));
                    }
                    for x in [0.3, 0.7, 1.0 + 0.4 * (c - 1.0), 1.0 + 0.85 * (c - 1.0)] {
                        let r = algebraic_residual(n, h, modulus, |t| phi.eval(t).unwrap(), x, residual_step(x, modulus));
                        assert!(r < 1e-8, "k={modulus} n={n} g={:?} x={x}: {r}", g.gamma());
                    }
                    // The printed normalization gives a different h, which fails.
                    let h_printed = h_from_lambda_printed(*lambda, g, modulus, m).unwrap();
                    let r = algebraic_residual(n, h_printed, modulus, |t| phi.eval(t).unwrap(), 0.3, residual_step(0.3, modulus));
                    assert!(r > 1e-4);
                }
            }
        }
    }
}

#[test]
fn eigenfunction_prefactor() {
    let p = gamma_to_problem(class([0, 0, 0]), 0.5).unwrap();
    let s = &van_vleck_zeros(&p, 2).unwrap().stieltjes[0];
    assert_eq!(evaluate_eigenfunction_algebraic(class([0, 0, 0]), s, 0.4).unwrap(), s.eval_derivs(0.4).0);
    let q = gamma_to_problem::<f64>(class([1, 0, 0]), 0.5).unwrap();
    let s = &van_vleck_zeros(&q, 2).unwrap().stieltjes[0];
    assert!(evaluate_eigenfunction_algebraic(class([1, 0, 0]), s, 0.0).is_err());
    let v = evaluate_eigenfunction_algebraic(class([1, 0, 0]), s, -0.25).unwrap();
    assert!((v - 0.5 * s.eval_derivs(-0.25).0).abs() < 1e-15 * v.abs().max(1.0));
}

#[test]
fn gamma_serializes_as_triple() {
    let json = serde_json::to_string(&class([1, 0, 1])).unwrap();
    assert_eq!(json, "[1,0,1]");
    assert!(serde_json::from_str::<GammaClass>("[1,2,0]").is_err());
}
