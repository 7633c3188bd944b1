//! Seeded random problems for sweeps.
//!
//! `α₁` is uniform in `[−10, 10]` and the two gaps uniform in `[0.1, 10]`,
//! so the ordering holds by construction; each `ρ` is log-uniform in
//! `[1e−2, 1e2]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::problem::LameProblem;

pub fn random_problem<R: Rng + ?Sized>(rng: &mut R) -> LameProblem<f64> {
    let a1 = rng.gen_range(-10.0..=10.0);
    let a2 = a1 + rng.gen_range(0.1..=10.0);
    let a3 = a2 + rng.gen_range(0.1..=10.0);
    let mut rho = || 10f64.powf(rng.gen_range(-2.0..=2.0));
    let rho = [rho(), rho(), rho()];
    LameProblem::new([a1, a2, a3], rho).expect("sampled problems are valid")
}

/// `count` problems from a fixed seed.
pub fn random_problems(seed: u64, count: usize) -> Vec<LameProblem<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_problem(&mut rng)).collect()
}
