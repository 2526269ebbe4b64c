#![allow(dead_code)]

use dgn_core::{random, ChainComplex, Field, Grading};
use dgn_pretr::{random_chain_category, ChainDgCategory, ObjectShape};
use rand::Rng;

/// A random chain complex on levels `0..levels` with small level dimensions.
pub fn random_complex(rng: &mut impl Rng, levels: usize, max_dim: usize) -> ChainComplex {
    let dims: Vec<usize> = (0..levels).map(|_| rng.gen_range(0..=max_dim)).collect();
    random::complex(Field::Rational, Grading::Chain, 0, &dims, rng)
}

/// Three small cochain complexes: homs stay a few dimensions wide.
pub fn small_category(rng: &mut impl Rng) -> ChainDgCategory {
    let shapes = [
        ObjectShape { lo: 0, dims: vec![1, 1] },
        ObjectShape { lo: -1, dims: vec![1, 1] },
        ObjectShape { lo: 0, dims: vec![1] },
    ];
    random_chain_category(Field::Rational, &shapes, rng)
}
