use proptest::prelude::*;
use vanvleck::eigen::van_vleck_eigenvalues;
use vanvleck::interlace::{check_consecutive_orders, check_distinct_across_orders, check_interlacing, interlacing_sweep};
use vanvleck::random::random_problems;
use vanvleck::Problem;

fn symmetric() -> Problem {
    Problem::new([-1.0, 0.0, 1.0], [0.5; 3]).unwrap()
}

#[test]
fn orders_one_and_two_of_symmetric_problem() {
    let inner = van_vleck_eigenvalues(&symmetric(), 1).unwrap().zeros;
    let outer = van_vleck_eigenvalues(&symmetric(), 2).unwrap().zeros;
    let r = 1.0 / 3f64.sqrt();
    assert!((inner[0] + r).abs() < 1e-13 && (inner[1] - r).abs() < 1e-13);
    assert!(check_interlacing(&inner, &outer, -1.0, 1.0).unwrap().holds);
}

#[test]
fn sweep_holds_for_symmetric_and_stretched_problems() {
    for v in interlacing_sweep(&symmetric(), 10).unwrap() {
        assert!(v.holds, "{v:?}");
    }
    let stretched = Problem::new([0.0, 1.0, 100.0], [5.0, 0.01, 2.0]).unwrap();
    let verdicts = interlacing_sweep(&stretched, 10).unwrap();
    assert_eq!(verdicts.len(), 9);
    assert!(verdicts.iter().all(|v| v.holds));
    assert!(interlacing_sweep(&symmetric(), 1).unwrap().is_empty());
}

#[test]
fn refined_pair_matches_sweep() {
    let p = Problem::new([0.0, 2.0, 8.0], [0.3, 1.7, 0.9]).unwrap();
    let sweep = interlacing_sweep(&p, 6).unwrap();
    for k in 1..6 {
        assert_eq!(check_consecutive_orders(&p, k).unwrap(), sweep[k - 1]);
    }
}

#[test]
fn distinct_across_orders_beyond_bracket_widths() {
    let d = check_distinct_across_orders(&symmetric(), 1).unwrap();
    let w = van_vleck_eigenvalues(&symmetric(), 2).unwrap().max_bracket_width();
    assert!(d > w && w > 0.0);
    for p in random_problems(11, 20) {
        for k in 1..15 {
            let w =
                van_vleck_eigenvalues(&p, k).unwrap().max_bracket_width() + van_vleck_eigenvalues(&p, k + 1).unwrap().max_bracket_width();
            assert!(check_distinct_across_orders(&p, k).unwrap() > w);
        }
    }
}

#[test]
fn zero_never_repeats_in_successive_orders() {
    // Symmetric problems have ν = 0 at every even order.
    for (c, r1, r2) in [(1.0, 0.5, 0.5), (3.0, 0.2, 4.0), (0.5, 7.0, 0.05)] {
        let p = Problem::new([-c, 0.0, c], [r1, r2, r1]).unwrap();
        for k in (2..20).step_by(2) {
            let even = van_vleck_eigenvalues(&p, k).unwrap();
            assert!(even.zeros[k / 2].abs() < 1e-13 * 2.0 * c);
            for odd in [k - 1, k + 1] {
                let zeros = van_vleck_eigenvalues(&p, odd).unwrap().zeros;
                assert!(zeros.iter().all(|z| z.abs() > 1e-6), "order {odd}: {zeros:?}");
            }
        }
    }
}

#[test]
fn self_distance_is_zero() {
    let z = van_vleck_eigenvalues(&symmetric(), 4).unwrap().zeros;
    assert_eq!(vanvleck::interlace::min_distance(&z, &z), 0.0);
}

fn holding_chain() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (2usize..12).prop_flat_map(|m| {
        prop::collection::vec(0.01f64..1.0, 2 * m + 1).prop_map(|steps| {
            let mut x = -1.0;
            let points: Vec<f64> = steps
                .iter()
                .map(|s| {
                    x += s;
                    x
                })
                .collect();
            let outer = points.iter().step_by(2).copied().collect();
            let inner = points.iter().skip(1).step_by(2).copied().collect();
            (inner, outer)
        })
    })
}

proptest! {
    #[test]
    fn swapping_roles_keeps_a_holding_subchain((inner, outer) in holding_chain()) {
        let lo = outer[0] - 1.0;
        let hi = outer[outer.len() - 1] + 1.0;
        prop_assert!(check_interlacing(&inner, &outer, lo, hi).unwrap().holds);
        let m = outer.len();
        let swapped = check_interlacing(&outer[1..m - 1], &inner, outer[0], outer[m - 1]).unwrap();
        prop_assert!(swapped.holds);
    }

    #[test]
    fn random_problems_interlace(seed in 0u64..1000) {
        let p = &random_problems(seed, 1)[0];
        for v in interlacing_sweep(p, 12).unwrap() {
            prop_assert!(v.holds);
        }
    }
}
