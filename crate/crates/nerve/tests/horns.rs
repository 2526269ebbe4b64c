mod common;

use common::*;
use dgn_ainfty::{check_functor, AInfinity};
use dgn_core::vector;
use dgn_nerve::{
    face, fill_inner_horn, fill_inner_horn_with, horn_of, random_closed, random_simplex, standard_simplex_category,
    to_functor, validate_simplex, validate_simplex_with, EpsilonReading, HornData, NerveError, NerveSimplex,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn two_dimensional_filler_composes() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let c = chain_category(&mut rng, 3);
    for _ in 0..10 {
        let objs = random_objects(&c, 2, &mut rng);
        let s = random_simplex(&c, objs.clone(), &mut rng).unwrap();
        let filled = fill_inner_horn(&c, &horn_of(&s, 1).unwrap()).unwrap();
        assert!(vector::is_zero(filled.get(&[0, 1, 2]).unwrap()));
        let composite = c.m(&objs, &[s.get(&[1, 2]).unwrap(), s.get(&[0, 1]).unwrap()]);
        assert_eq!(filled.get(&[0, 2]).unwrap(), &composite);
    }
}

#[test]
fn filler_of_identities_is_the_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let c = chain_category(&mut rng, 2);
    let id = c.unit(1).unwrap();
    let mut s = NerveSimplex::zero(&c, vec![1, 1, 1]);
    s.set(&[0, 1], id.clone());
    s.set(&[1, 2], id.clone());
    let h = horn_of(&s, 1).unwrap();
    assert_eq!(fill_inner_horn(&c, &h).unwrap().get(&[0, 2]).unwrap(), &id);
}

#[test]
fn outer_horns_are_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let c = chain_category(&mut rng, 2);
    let s = random_simplex(&c, vec![0, 1, 0], &mut rng).unwrap();
    assert_eq!(horn_of(&s, 0), Err(NerveError::NotInner { n: 2, p: 0 }));
    assert!(horn_of(&s, 2).is_err());
    let h = HornData { n: 2, p: 2, simplex: s };
    assert!(fill_inner_horn(&c, &h).is_err());
}

fn fill_and_check(c: &dyn AInfinity, s: &NerveSimplex, p: usize) {
    let h = horn_of(s, p).unwrap();
    let filled = fill_inner_horn(c, &h).unwrap();
    let r = validate_simplex(c, &filled).unwrap();
    assert!(r.passed(), "n={} p={p}: {:?}", s.n, r.keys());
    // restriction to the horn is the horn
    for (k, v) in &h.simplex.components {
        assert_eq!(filled.get(k).unwrap(), v);
    }
    for j in (0..=s.n).filter(|&j| j != p) {
        assert_eq!(face(c, &filled, j).unwrap(), face(c, s, j).unwrap());
    }
}

#[test]
fn hundred_random_inner_horns_over_a_chain_category() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let c = chain_category(&mut rng, 4);
    for t in 0..100 {
        let n = 2 + t % 4;
        let p = rng.gen_range(1..n);
        let s = random_simplex(&c, random_objects(&c, n, &mut rng), &mut rng).unwrap();
        fill_and_check(&c, &s, p);
    }
}

#[test]
fn inner_horns_over_a_non_dg_category() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (_, _, g) = gauged(&mut rng, 5);
    for t in 0..20 {
        let n = 2 + t % 4;
        let p = rng.gen_range(1..n);
        let s = random_simplex(&g, monotone_objects(&g, n, &mut rng), &mut rng).unwrap();
        fill_and_check(&g, &s, p);
    }
}

#[test]
fn horns_built_from_closed_edges_alone() {
    // a spine of closed maps fills by composing, one inner horn at a time
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let c = chain_category(&mut rng, 3);
    let objs = vec![0, 1, 2];
    let mut s = NerveSimplex::zero(&c, objs.clone());
    s.set(&[0, 1], random_closed(&c, 0, 1, &mut rng));
    s.set(&[1, 2], random_closed(&c, 1, 2, &mut rng));
    let h = horn_of(&s, 1).unwrap();
    assert!(validate_simplex(&c, &fill_inner_horn(&c, &h).unwrap()).unwrap().passed());
}

/// The two readings of the higher sign differ for odd `k` and even `r`, so a
/// 3-simplex over a dg-category already separates them. Only the block-size
/// reading yields fillers that are functors out of `A∞[Δ³]`.
#[test]
fn block_size_reading_is_the_one_that_fills() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let c = chain_category(&mut rng, 3);
    let delta = standard_simplex_category(3);
    let mut separated = 0;
    for _ in 0..30 {
        let s = random_simplex(&c, random_objects(&c, 3, &mut rng), &mut rng).unwrap();
        let p = rng.gen_range(1..3);
        let h = horn_of(&s, p).unwrap();
        let good = fill_inner_horn_with(&c, &h, EpsilonReading::BlockSizes).unwrap();
        assert!(check_functor(&to_functor(&c, &good).unwrap(), &delta, &c, 4).passed());
        let other = fill_inner_horn_with(&c, &h, EpsilonReading::CutPositions).unwrap();
        if other != good {
            separated += 1;
            assert!(!check_functor(&to_functor(&c, &other).unwrap(), &delta, &c, 4).passed());
            assert!(!validate_simplex_with(&c, &other, EpsilonReading::BlockSizes).unwrap().passed());
        }
    }
    assert!(separated > 0);
}
