mod common;

use common::*;
use dgn_ainfty::{compose_functors, identity_functor, AInfinity};
use dgn_nerve::{degeneracy, face, from_functor, pushforward, random_simplex, to_functor, validate_simplex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn identity_pushforward_is_trivial() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let c = chain_category(&mut rng, 2);
    let s = random_simplex(&c, vec![0, 1, 0, 1], &mut rng).unwrap();
    assert_eq!(pushforward(&identity_functor(&c), &c, &c, &s).unwrap(), s);
}

#[test]
fn gauge_pushforward_validates_and_matches_functor_composition() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (d, f, d2) = gauged(&mut rng, 4);
    for n in 1..=4 {
        let s = random_simplex(&d, monotone_objects(&d, n, &mut rng), &mut rng).unwrap();
        let t = pushforward(&f, &d, &d2, &s).unwrap();
        assert!(validate_simplex(&d2, &t).unwrap().passed(), "n={n}");
        // oracle: the general composition of functors out of A∞[Δⁿ]
        let delta = dgn_nerve::standard_simplex_category(n);
        let composite = compose_functors(&f, &to_functor(&d, &s).unwrap(), &delta, &d2, n.max(1)).unwrap();
        assert_eq!(from_functor(&d2, &composite, n), t);
    }
}

#[test]
fn two_simplex_picks_up_the_second_component() {
    // (F_*f)_{012} = F_1(f_{012}) + F_2(f_{12}, f_{01}), since ε_2(1,1) = 0
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (d, f, d2) = gauged(&mut rng, 3);
    let s = random_simplex(&d, vec![0, 1, 2], &mut rng).unwrap();
    let t = pushforward(&f, &d, &d2, &s).unwrap();
    use dgn_ainfty::FunctorLike;
    let expected = dgn_core::vector::add(
        &f.f(&[0, 2], &[s.get(&[0, 1, 2]).unwrap()]),
        &f.f(&[0, 1, 2], &[s.get(&[1, 2]).unwrap(), s.get(&[0, 1]).unwrap()]),
    );
    assert_eq!(t.get(&[0, 1, 2]).unwrap(), &expected);
    // a dg-functor acts componentwise
    assert_eq!(t.get(&[0, 1]).unwrap(), s.get(&[0, 1]).unwrap());
}

#[test]
fn pushforward_is_functorial_and_simplicial() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (d, f, d2) = gauged(&mut rng, 4);
    let g = dgn_ainfty::gauge::random_gauge(&d2, 3, 0.6, &mut rng);
    let d3 = dgn_ainfty::gauge::gauge_transform(&d2, &g, 3).unwrap();
    let gf = compose_functors(&g, &f, &d, &d3, 3).unwrap();
    for n in 1..=3 {
        let s = random_simplex(&d, monotone_objects(&d, n, &mut rng), &mut rng).unwrap();
        let once = pushforward(&gf, &d, &d3, &s).unwrap();
        let twice = pushforward(&g, &d2, &d3, &pushforward(&f, &d, &d2, &s).unwrap()).unwrap();
        assert_eq!(once, twice);
        let t = pushforward(&f, &d, &d2, &s).unwrap();
        for j in 0..=n {
            assert_eq!(pushforward(&f, &d, &d2, &face(&d, &s, j).unwrap()).unwrap(), face(&d2, &t, j).unwrap());
            assert_eq!(
                pushforward(&f, &d, &d2, &degeneracy(&d, &s, j).unwrap()).unwrap(),
                degeneracy(&d2, &t, j).unwrap()
            );
        }
    }
}

#[test]
fn object_mismatch_is_an_error() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let c = chain_category(&mut rng, 3);
    let small = chain_category(&mut rng, 1);
    let s = random_simplex(&c, vec![2, 1], &mut rng).unwrap();
    assert!(pushforward(&identity_functor(&small), &small, &small, &s).is_err());
    let _ = c.num_objects();
}
