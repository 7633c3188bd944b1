use num_complex::Complex64;
use proptest::prelude::*;

use vanvleck::eigen::{van_vleck_eigenvalues, van_vleck_zeros};
use vanvleck::equilateral::{classify, complex_zeros, cube_roots_of_unity, equilateral_zeros};
use vanvleck::lame::{h_from_lambda, lambda_from_h};
use vanvleck::spectral::{b_limit, RhoA, SpectralPolynomialSequence};
use vanvleck::{check_interlacing, heine_count, interlacing_sweep, GammaClass, Problem};

fn problem_strategy() -> impl Strategy<Value = Problem> {
    (-10.0f64..10.0, 0.1f64..10.0, 0.1f64..10.0, prop::array::uniform3(-2.0f64..2.0))
        .prop_map(|(a1, d1, d2, e)| Problem::new([a1, a1 + d1, a1 + d1 + d2], e.map(|x| 10f64.powf(x))).unwrap())
}

fn set_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    let one_way = |a: &[Complex64], b: &[Complex64]| {
        a.iter().map(|x| b.iter().map(|y| (x - y).norm()).fold(f64::INFINITY, f64::min)).fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectrum_is_sorted_bracketed_and_certified(p in problem_strategy(), k in 1usize..40) {
        let s = van_vleck_zeros(&p, k).unwrap();
        let [a1, _, a3] = *p.alpha();
        prop_assert_eq!(s.zeros.len(), heine_count(k));
        prop_assert!(s.zeros.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(s.zeros.iter().all(|&z| z > a1 && z < a3));
        for (z, (lo, hi)) in s.zeros.iter().zip(&s.brackets) {
            prop_assert!(lo <= z && z <= hi);
        }
        prop_assert!(s.max_residual() < 1e-9, "{}", s.max_residual());
    }

    #[test]
    fn stieltjes_roots_are_located_and_separated(p in problem_strategy(), k in 1usize..12) {
        for st in &van_vleck_zeros(&p, k).unwrap().stieltjes {
            let c = st.check().unwrap();
            prop_assert_eq!(c.roots.len(), k);
            prop_assert!(c.distance_to_alpha2 > 0.0 && c.distance_to_nu > 0.0);
            prop_assert!(c.shah_separation);
        }
    }

    #[test]
    fn mirror_problems_have_odd_spectra(c in 0.1f64..10.0, r1 in 0.01f64..50.0, r2 in 0.01f64..50.0, k in 1usize..30) {
        let p = Problem::new([-c, 0.0, c], [r1, r2, r1]).unwrap();
        let z = van_vleck_eigenvalues(&p, k).unwrap().zeros;
        for (a, b) in z.iter().zip(z.iter().rev()) {
            prop_assert!((a + b).abs() <= 1e-12 * c, "{a} {b}");
        }
    }

    #[test]
    fn consecutive_orders_interlace(p in problem_strategy(), k_max in 2usize..25) {
        for v in interlacing_sweep(&p, k_max).unwrap() {
            prop_assert!(v.holds && v.lower_bound_ok && v.upper_bound_ok);
        }
    }

    #[test]
    fn chain_verdict_matches_brute_force(mut inner in prop::collection::vec(-5.0f64..5.0, 1..8), mut outer in prop::collection::vec(-5.0f64..5.0, 2..9)) {
        inner.sort_by(f64::total_cmp);
        inner.dedup();
        outer.sort_by(f64::total_cmp);
        outer.dedup();
        outer.truncate(inner.len() + 1);
        prop_assume!(outer.len() == inner.len() + 1);
        let v = check_interlacing(&inner, &outer, -6.0, 6.0).unwrap();
        let strict = (0..inner.len()).all(|i| outer[i] < inner[i] && inner[i] < outer[i + 1]);
        prop_assert_eq!(v.holds, strict);
    }

    #[test]
    fn spectral_polynomials_are_monic(p in problem_strategy()) {
        let s = SpectralPolynomialSequence::new(&p, 10).unwrap();
        for m in 2..=10 {
            let c = s.poly(m).unwrap();
            prop_assert_eq!(c.len(), m + 1);
            prop_assert_eq!(c[m], 1.0);
        }
        prop_assert!(b_limit(&p) > 0.0);
    }

    #[test]
    fn lambda_map_preserves_order(g in 0usize..8, modulus in 0.05f64..0.95, m in 1usize..40, h1 in -10.0f64..100.0, dh in 1e-6f64..10.0) {
        let g = GammaClass::ALL[g];
        let (l1, l2) = (lambda_from_h(h1, g, modulus, m).unwrap(), lambda_from_h(h1 + dh, g, modulus, m).unwrap());
        prop_assert!(l1 < l2);
        let back = h_from_lambda(l1, g, modulus, m).unwrap();
        prop_assert!((back - h1).abs() <= 1e-13 * h1.abs().max(1.0));
    }

    #[test]
    fn equilateral_zeros_are_rotation_covariant(rho in 0.05f64..5.0, k in 1usize..20) {
        let s = equilateral_zeros(rho, k).unwrap();
        let omega = cube_roots_of_unity::<f64>()[1];
        let rotated: Vec<Complex64> = s.zeros.iter().map(|z| z * omega).collect();
        prop_assert_eq!(s.zeros.len(), k + 1);
        prop_assert!(set_distance(&rotated, &s.zeros) < 1e-9);
        prop_assert!(s.zeros.iter().sum::<Complex64>().norm() < 1e-10);
        prop_assert_eq!(s.center_zero_present, k % 3 != 2);
        prop_assert!(s.ray_moduli.iter().all(|&l| l > 0.0 && l < 1.0));
        prop_assert!(s.residuals.iter().all(|&r| r < 1e-8));
    }

    #[test]
    fn distinct_exponents_leave_the_rays(r in prop::array::uniform3(0.1f64..3.0), k in 2usize..10) {
        prop_assume!((r[0] - r[1]).abs() > 0.1 && (r[1] - r[2]).abs() > 0.1 && (r[0] - r[2]).abs() > 0.1);
        let s = complex_zeros(r, k).unwrap();
        prop_assert!(s.residuals.iter().all(|&x| x < 1e-8));
        prop_assert!(classify(s).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn density_is_a_probability_density(p in problem_strategy()) {
        let rho = RhoA::new(&p);
        prop_assert!((rho.mass().unwrap() - 1.0).abs() < 1e-8);
        let (lo, hi) = rho.support();
        let a2 = p.alpha()[1];
        for i in 1..40 {
            let x = lo + (hi - lo) * i as f64 / 40.0;
            if (x - a2).abs() > 1e-6 * p.span() {
                prop_assert!(rho.density(x).unwrap() >= 0.0);
            }
        }
        let cdf_end = rho.cdf(hi).unwrap();
        prop_assert!((cdf_end - 1.0).abs() < 1e-8);
    }
}
