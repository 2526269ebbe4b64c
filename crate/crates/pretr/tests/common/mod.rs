#![allow(dead_code)]

use dgn_core::{random, ChainComplex, Field, Grading, Vector};
use dgn_pretr::{random_chain_category, random_shapes, ChainDgCategory};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Three random objects plus the zero complex, which is object 3.
pub fn category(rng: &mut impl Rng) -> ChainDgCategory {
    let shapes = random_shapes(3, 2, rng);
    let mut c = random_chain_category(Field::Rational, &shapes, rng);
    c.push("0".into(), ChainComplex::zero(Grading::Cochain));
    c
}

/// A random closed degree-0 map between two random nonzero objects, and a third object.
pub fn instance(rng: &mut impl Rng) -> (ChainDgCategory, usize, usize, Vector, usize) {
    let c = category(rng);
    let (x, y, z) = (rng.gen_range(0..3), rng.gen_range(0..3), rng.gen_range(0..3));
    let f = c.random_closed(x, y, rng);
    (c, x, y, f, z)
}

/// A random chain complex on levels `0..levels`.
pub fn complex(rng: &mut impl Rng, levels: usize, max_dim: usize) -> ChainComplex {
    let dims: Vec<usize> = (0..levels).map(|_| rng.gen_range(0..=max_dim)).collect();
    random::complex(Field::Rational, Grading::Chain, 0, &dims, rng)
}

pub fn homology(c: &ChainComplex, levels: std::ops::RangeInclusive<i32>) -> Vec<usize> {
    levels.map(|n| c.homology_dim(n)).collect()
}


/// A random chain complex on `1..=3` levels.
pub fn any_complex(rng: &mut impl Rng, max_dim: usize) -> ChainComplex {
    let levels = rng.gen_range(1..=3);
    complex(rng, levels, max_dim)
}
