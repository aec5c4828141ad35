//! Deterministic sampling of rational parameters.
//!
//! ChaCha8 keyed by a 64-bit seed; numerators uniform in [-1000, 1000],
//! denominators uniform in [1, 1000]. The stream is fixed for a given seed on
//! every platform, so sampled checks are reproducible.

use crate::arith::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub fn sample_rationals(seed: u64, count: usize) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n: i64 = rng.gen_range(-1000..=1000);
            let d: i64 = rng.gen_range(1..=1000);
            Rational::new(n.into(), d.into())
        })
        .collect()
}
