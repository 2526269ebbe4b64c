#![allow(dead_code)]

use dgn_ainfty::gauge::{directed, gauge_transform, random_gauge};
use dgn_ainfty::{AInfCategory, AInfFunctor, AInfinity, FunctorLike};
use dgn_core::{Field, Scalar};
use dgn_nerve::NerveSimplex;
use dgn_pretr::{random_chain_category, ChainDgCategory, ObjectShape};
use rand::Rng;

pub fn chain_category(rng: &mut impl Rng, objects: usize) -> ChainDgCategory {
    let shapes: Vec<ObjectShape> = (0..objects)
        .map(|i| ObjectShape { lo: -(i as i32 % 2), dims: vec![1 + i % 2, 1 + (i / 2) % 2] })
        .collect();
    random_chain_category(Field::Rational, &shapes, rng)
}

/// A non-dg category with nonzero `m_3` (and `m_4` for five objects) and the
/// gauge functor it was transported along.
pub fn gauged(rng: &mut impl Rng, objects: usize) -> (AInfCategory, AInfFunctor, AInfCategory) {
    let c = chain_category(rng, 3);
    let order: Vec<usize> = (0..objects).map(|i| i % 3).collect();
    let d = directed(&c, &order).unwrap();
    let cap = objects - 1;
    let f = random_gauge(&d, cap, 0.6, rng);
    let d2 = gauge_transform(&d, &f, cap).unwrap();
    (d, f, d2)
}

pub fn random_objects(c: &dyn AInfinity, n: usize, rng: &mut impl Rng) -> Vec<usize> {
    (0..=n).map(|_| rng.gen_range(0..c.num_objects())).collect()
}

/// Objects in weakly increasing order, so that every hom of a directed category is reachable.
pub fn monotone_objects(c: &dyn AInfinity, n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut v = random_objects(c, n, rng);
    v.sort();
    v
}

pub fn functors_agree(a: &dyn FunctorLike, b: &dyn FunctorLike, src: &dyn AInfinity, n_max: usize) -> bool {
    for n in 1..=n_max {
        for objs in dgn_ainfty::object_strings(src, n) {
            let spaces = dgn_ainfty::arg_spaces(src, &objs);
            for tuple in dgn_ainfty::basis_tuples(&spaces) {
                let args: Vec<Vec<Scalar>> =
                    spaces.iter().zip(&tuple).map(|(s, &b)| dgn_core::vector::unit(s.dim(), b)).collect();
                let refs: Vec<&[Scalar]> = args.iter().map(|v| v.as_slice()).collect();
                if a.object(objs[0]) != b.object(objs[0]) || a.f(&objs, &refs) != b.f(&objs, &refs) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn has_nonzero_top(s: &NerveSimplex) -> bool {
    s.components.iter().any(|(k, v)| k.len() == s.n + 1 && !dgn_core::vector::is_zero(v))
}
