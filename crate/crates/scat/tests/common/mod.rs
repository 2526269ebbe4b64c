#![allow(dead_code)]

use dgn_core::Field;
use dgn_pretr::{random_concentrated_category, ChainDgCategory};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Three objects with cohomology in degree 0 only, so every cube fills.
pub fn category(rng: &mut impl Rng) -> ChainDgCategory {
    random_concentrated_category(Field::Rational, 3, 1, rng)
}

pub fn objects(c: &ChainDgCategory, n: usize, rng: &mut impl Rng) -> Vec<usize> {
    (0..=n).map(|_| rng.gen_range(0..c.objects.len())).collect()
}
