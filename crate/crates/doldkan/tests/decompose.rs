mod common;

use std::collections::BTreeMap;

use common::random_complex;
use dgn_core::{random, vector, Field};
use dgn_doldkan::{all_surjections, decompose, dk, reassemble, Decomposer, Normalized};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn normalized_vectors_have_a_single_component() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let a = random_complex(&mut rng, 4, 2);
    let x = dk(&a, 3).unwrap();
    let norm = Normalized::new(&x.space).unwrap();
    for n in 0..=3 {
        let v = random::combination(Field::Rational, &norm.inclusions[n], &mut rng);
        let comps = decompose(&x.space, n, &v).unwrap();
        let id: Vec<usize> = (0..=n).collect();
        for (eta, c) in &comps {
            if *eta == id {
                assert_eq!(c, &v);
            } else {
                assert!(vector::is_zero(c), "{eta:?}");
            }
        }
    }
}

#[test]
fn a_degenerate_vertex_sits_at_the_constant_surjection() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let a = random_complex(&mut rng, 3, 2);
    let x = dk(&a, 2).unwrap();
    let y = random::vector(Field::Rational, x.space.dim(0), &mut rng);
    let v = x.space.degeneracy(0, 0).mul_vec(&y).unwrap();
    let comps = decompose(&x.space, 1, &v).unwrap();
    for (eta, c) in &comps {
        if *eta == [0, 0] {
            assert_eq!(c, &y);
        } else {
            assert!(vector::is_zero(c));
        }
    }
}

#[test]
fn round_trips_on_fifty_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let levels = rng.gen_range(1..=5);
        let a = random_complex(&mut rng, levels, 2);
        let x = dk(&a, 5).unwrap();
        let norm = Normalized::new(&x.space).unwrap();
        for n in 0..=5 {
            let dec = Decomposer::new(&x.space, &norm, n).unwrap();
            // reassemble ∘ decompose = id
            let v = random::vector(Field::Rational, x.space.dim(n), &mut rng);
            let comps = dec.decompose(&v).unwrap();
            for (eta, c) in &comps {
                let p = eta[n];
                for i in 0..p {
                    assert!(vector::is_zero(&x.space.face(p, i).mul_vec(c).unwrap()), "c_η normalized");
                }
            }
            assert_eq!(reassemble(&x.space, n, &comps).unwrap(), v);
            // decompose ∘ reassemble = id
            let mut chosen = BTreeMap::new();
            for eta in all_surjections(n) {
                let p = eta[n];
                chosen.insert(eta, random::combination(Field::Rational, &norm.inclusions[p], &mut rng));
            }
            let w = reassemble(&x.space, n, &chosen).unwrap();
            let back = dec.decompose(&w).unwrap();
            for (eta, c) in &chosen {
                let expected = if norm.inclusions[eta[n]].cols() == 0 { None } else { Some(c) };
                assert_eq!(back.get(eta), expected);
            }
        }
    }
}

#[test]
fn decomposition_in_a_product_space() {
    // X × Y is not presented as a DK space, so only the generic path applies
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let x = dk(&random_complex(&mut rng, 3, 1), 3).unwrap();
    let y = dk(&random_complex(&mut rng, 3, 1), 3).unwrap();
    let prod = x.space.product(&y.space);
    assert!(prod.identity_failures().is_empty());
    for n in 0..=3 {
        let v = random::vector(Field::Rational, prod.dim(n), &mut rng);
        let comps = decompose(&prod, n, &v).unwrap();
        assert_eq!(reassemble(&prod, n, &comps).unwrap(), v);
    }
    assert!(decompose(&prod, 1, &[]).is_err() || prod.dim(1) == 0);
}
