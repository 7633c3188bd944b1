use super::*;
use crate::matrix::build_matrix;

fn problem(alpha: [f64; 3], rho: [f64; 3]) -> LameProblem<f64> {
    LameProblem::new(alpha, rho).unwrap()
}

fn symmetric() -> LameProblem<f64> {
    problem([-1.0, 0.0, 1.0], [0.5; 3])
}

#[test]
fn k1_symmetric_closed_form() {
    let s = van_vleck_zeros(&symmetric(), 1).unwrap();
    let r = 1.0 / 3f64.sqrt();
    assert!((s.zeros[0] + r).abs() < 2e-13 && (s.zeros[1] - r).abs() < 2e-13);
    // Oracle: roots of 3ν² + 2(1−α)ν − α with α = 1.
    let q = |nu: f64| 3.0 * nu * nu - 1.0;
    assert!(q(s.zeros[0]).abs() < 1e-12 && q(s.zeros[1]).abs() < 1e-12);
}

#[test]
fn k2_symmetric_middle_zero_vanishes() {
    let s = van_vleck_zeros(&symmetric(), 2).unwrap();
    assert_eq!(s.zeros.len(), 3);
    assert!(s.zeros[1].abs() < 1e-13);
}

#[test]
fn k5_agrees_with_sign_change_oracle() {
    let p = problem([0.0, 2.0, 8.0], [0.3, 1.7, 0.9]);
    let s = van_vleck_zeros(&p, 5).unwrap();
    let m = build_matrix(&p.normalize(), 5).unwrap();
    assert_eq!(s.zeros.len(), 6);
    for (i, &z) in s.zeros.iter().enumerate() {
        assert!(z > 0.0 && z < 8.0);
        assert!(s.residuals[i] < 1e-9, "{}", s.residuals[i]);
        let zn = s.zeros_normalized[i];
        assert!(sign_change_around(&m.bands, zn, 1e-10 * 4.0));
        assert!(char_poly_scaled(&m.bands, zn).relative() < 1e-8);
    }
}

#[test]
fn ode_residual_on_closed_form_k1() {
    // Normalized frame of the symmetric problem is itself; S = x + ν there.
    let p = symmetric();
    for nu in [-1.0 / 3f64.sqrt(), 1.0 / 3f64.sqrt()] {
        let s = StieltjesPolynomial::from_normalized_coefficients(&p, vec![nu, 1.0], nu).unwrap();
        assert!(ode_residual(&p, &s, nu).unwrap() < 1e-12);
        // Detector sensitivity.
        assert!(ode_residual(&p, &s, nu + 1e-3).unwrap() > 1e-5);
    }
    // General α: c = ν + 2(1−α)/3.
    let p = problem([-1.0, 0.0, 3.0], [0.5; 3]);
    let a: f64 = 3.0;
    let nu = (-(2.0 * (1.0 - a)) + (4.0 * (1.0 - a) * (1.0 - a) + 12.0 * a).sqrt()) / 6.0;
    let s = StieltjesPolynomial::from_normalized_coefficients(&p, vec![nu + 2.0 * (1.0 - a) / 3.0, 1.0], nu).unwrap();
    assert!(ode_residual(&p, &s, nu).unwrap() < 1e-12);
}

#[test]
fn zero_polynomial_rejected() {
    let p = symmetric();
    assert!(StieltjesPolynomial::from_normalized_coefficients(&p, vec![0.0, 0.0], 0.0).is_err());
    let mut s = StieltjesPolynomial::from_normalized_coefficients(&p, vec![0.0, 1.0], 0.0).unwrap();
    s.coefficients = vec![0.0, 0.0];
    assert!(ode_residual(&p, &s, 0.0).is_err());
}

#[test]
fn monomial_and_chebyshev_forms_agree() {
    let p = problem([-0.5, 0.25, 2.0], [0.8, 0.2, 1.3]);
    let s = van_vleck_zeros(&p, 6).unwrap();
    for st in &s.stieltjes {
        let mono = StieltjesPolynomial { chebyshev: None, ..st.clone() };
        assert!(ode_residual(&p, &mono, st.associated_nu).unwrap() < 1e-10);
        // Same polynomial up to a positive factor.
        let xs = [-0.4, 0.0, 0.7, 1.9];
        let ratios: Vec<f64> = xs.iter().map(|&x| st.eval_derivs(x).0 / mono.evaluate_monic(x)).collect();
        for r in &ratios {
            assert!(*r > 0.0 && (r / ratios[0] - 1.0).abs() < 1e-9, "{ratios:?}");
        }
    }
}

#[test]
fn stieltjes_roots_and_shah_separation() {
    let problems = [symmetric(), problem([0.0, 1.0, 100.0], [5.0, 0.01, 2.0]), problem([-3.0, -2.5, 4.0], [0.05, 3.0, 0.4])];
    for p in &problems {
        for k in 1..=20 {
            let s = van_vleck_zeros(p, k).unwrap();
            for st in &s.stieltjes {
                let c = st.check().unwrap();
                assert_eq!(c.roots.len(), k);
                assert!(c.shah_separation);
            }
        }
    }
}

#[test]
fn symmetric_spectrum_is_odd() {
    let p = problem([-2.0, 0.0, 2.0], [0.7, 0.3, 0.7]);
    for k in 1..25 {
        let s = van_vleck_eigenvalues(&p, k).unwrap();
        for (a, b) in s.zeros.iter().zip(s.zeros.iter().rev()) {
            assert!((a + b).abs() < 1e-12);
        }
    }
}

#[test]
fn residuals_stay_small_at_high_order() {
    let p = problem([0.0, 2.0, 8.0], [0.5, 0.5, 0.5]);
    let s = van_vleck_zeros(&p, 200).unwrap();
    assert!(s.max_residual() < 1e-9, "{}", s.max_residual());
}

#[test]
fn brackets_contain_zeros() {
    let p = problem([1.0, 1.5, 9.0], [2.0, 0.1, 0.3]);
    let e = van_vleck_eigenvalues(&p, 40).unwrap();
    for (z, (lo, hi)) in e.zeros.iter().zip(&e.brackets) {
        assert!(lo <= z && z <= hi);
        assert!(hi - lo <= 1e-13 * 8.0 * 2.0);
    }
}

#[test]
fn f32_path_runs() {
    let p = LameProblem::<f32>::new([-1.0, 0.0, 1.0], [0.5; 3]).unwrap();
    let s = van_vleck_eigenvalues(&p, 3).unwrap();
    assert_eq!(s.zeros.len(), 4);
    assert!(s.zeros.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn stieltjes_roots_at_high_order() {
    let problems = [symmetric(), problem([0.0, 1.0, 100.0], [5.0, 0.01, 2.0]), problem([-3.0, -2.5, 4.0], [0.05, 3.0, 0.4])];
    for p in &problems {
        for k in [40, 80] {
            let s = van_vleck_zeros(p, k).unwrap();
            for st in &s.stieltjes {
                let c = st.check().unwrap();
                assert_eq!(c.roots.len(), k);
            }
        }
    }
}

#[test]
fn polished_roots_solve_equilibrium_and_match_raw_roots() {
    let p = problem([-0.5, 0.25, 2.0], [0.8, 0.2, 1.3]);
    let s = van_vleck_zeros(&p, 12).unwrap();
    let [a1, a2, a3] = *p.alpha();
    for st in &s.stieltjes {
        let polished = st.roots().unwrap();
        assert!(equilibrium::equilibrium_residual(p.alpha(), p.rho(), &polished) < 1e-13);
        assert!((equilibrium::nu_from_roots(p.alpha(), p.rho(), &polished) - st.associated_nu).abs() < 1e-12);
        // Unpolished roots lose digits where S is small relative to its maximum.
        let ev = st.evaluator();
        let raw = roots::sign_change_roots(|x| ev.at(0, x), |x| ev.at(1, x), &[(a1, a2), (a2, a3)], 12, st.root_tol()).unwrap();
        for (a, b) in raw.iter().zip(&polished) {
            assert!((a - b).abs() < 1e-5, "{a} {b}");
        }
    }
}
