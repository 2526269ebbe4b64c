mod common;

use dgn_ainfty::AInfinity;
use dgn_core::{vector, Scalar};
use dgn_nerve::{dg_defect, strings, validate_simplex, NerveSimplex};
use dgn_pretr::ChainDgCategory;
use dgn_scat::{
    big_degeneracy, big_face, big_to_small, big_to_small_unchecked, comparison_naturality_check, constant_big_simplex,
    random_big_simplex, BigNerveSimplex, MapCache, ScatError,
};

fn instance(seed: u64, n: usize) -> (ChainDgCategory, BigNerveSimplex) {
    let mut r = common::rng(seed);
    let c = common::category(&mut r);
    let objects = common::objects(&c, n, &mut r);
    let s = random_big_simplex(&c, objects, &mut r).unwrap();
    (c, s)
}

fn dg_identity_holds(c: &ChainDgCategory, small: &NerveSimplex) -> bool {
    strings(small.n).iter().all(|st| vector::is_zero(&dg_defect(c, small, st).unwrap()))
}

#[test]
fn edges_are_the_vertices_of_the_mapping_space() {
    let (c, s) = instance(1, 2);
    let small = big_to_small(&c, &s).unwrap();
    let cache = MapCache::new(&c, &s.objects, 2).unwrap();
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let g = &s.data[&vec![vec![i, j]]];
        assert_eq!(small.get(&[i, j]).unwrap(), &cache.get(s.objects[i], s.objects[j]).to_hom(0, g));
        // closed of degree 0, so the H⁰ class is carried over unchanged
        let f = small.get(&[i, j]).unwrap();
        assert!(vector::is_zero(&c.d(s.objects[i], s.objects[j], f)));
    }
}

#[test]
fn triangles_are_minus_the_top_of_the_flag_edge() {
    for seed in 0..4 {
        let (c, s) = instance(10 + seed, 3);
        let small = big_to_small(&c, &s).unwrap();
        let cache = MapCache::new(&c, &s.objects, 3).unwrap();
        for st in strings(3).into_iter().filter(|st| st.len() == 3) {
            let (a, b) = (s.objects[st[0]], s.objects[st[2]]);
            let flag = vec![vec![st[0], st[2]], st.clone()];
            let space = cache.get(a, b);
            let top = space.dk.top(1, &s.data[&flag]);
            assert_eq!(small.get(&st).unwrap(), &vector::neg(&space.to_hom(1, &top)));
        }
    }
}

#[test]
fn images_satisfy_the_small_nerve_equations() {
    for seed in 0..10u64 {
        let n = 1 + seed as usize % 3;
        let (c, s) = instance(20 + seed, n);
        let small = big_to_small(&c, &s).unwrap();
        assert!(validate_simplex(&c, &small).unwrap().passed(), "seed {seed}");
        assert!(dg_identity_holds(&c, &small));
    }
}

#[test]
fn a_four_simplex_maps_to_a_valid_small_simplex() {
    let (c, s) = instance(40, 4);
    let small = big_to_small(&c, &s).unwrap();
    assert!(validate_simplex(&c, &small).unwrap().passed());
    assert!(dg_identity_holds(&c, &small));
    // Hom^{−3} vanishes for these objects; Hom^{−2} carries the 3-strings
    assert!(small.components.iter().any(|(k, v)| k.len() == 4 && !vector::is_zero(v)));
}

#[test]
fn the_comparison_is_simplicial() {
    for seed in 0..5u64 {
        let (c, s) = instance(50 + seed, 2 + seed as usize % 2);
        let report = comparison_naturality_check(&c, &s).unwrap();
        assert!(report.passed(), "seed {seed}: {report:?}");
        assert_eq!(report.faces_checked, s.n + 1);
        assert_eq!(report.degeneracies_checked, s.n + 1);
    }
}

#[test]
fn degenerate_big_simplices_map_to_degenerate_small_ones() {
    let (c, s) = instance(60, 2);
    for j in 0..=2 {
        let d = big_degeneracy(&c, &s, j).unwrap();
        let image = big_to_small(&c, &d).unwrap();
        assert_eq!(image, dgn_nerve::degeneracy(&c, &big_to_small(&c, &s).unwrap(), j).unwrap());
        assert_eq!(image.get(&[j, j + 1]).unwrap(), &c.unit(s.objects[j]).unwrap());
    }
}

#[test]
fn strictly_commuting_simplices_have_no_higher_components() {
    let mut r = common::rng(61);
    let c = common::category(&mut r);
    let objects = vec![0, 1, 2, 1];
    let maps: Vec<_> = objects.windows(2).map(|w| c.random_closed(w[0], w[1], &mut r)).collect();
    let s = constant_big_simplex(&c, objects, &maps).unwrap();
    let small = big_to_small(&c, &s).unwrap();
    for (k, v) in &small.components {
        assert_eq!(vector::is_zero(v), k.len() > 2 || vector::is_zero(&maps[k[0]]) && k[1] == k[0] + 1);
    }
}

#[test]
fn invalid_input_is_refused() {
    let (c, mut s) = instance(62, 3);
    let v = s.data.get_mut(&vec![vec![0, 3], vec![0, 2, 3]]).unwrap();
    v[0] = &v[0] + &Scalar::one();
    assert!(matches!(big_to_small(&c, &s), Err(ScatError::Invalid(_))));
}

#[test]
fn the_printed_signs_are_forced() {
    // flipping the overall sign at one length breaks the small-nerve equations
    for k in [2usize, 3] {
        let (c, s) = instance(70 + k as u64, 3);
        let mut small = big_to_small_unchecked(&c, &s).unwrap();
        for (key, v) in small.components.iter_mut() {
            if key.len() == k + 1 {
                *v = vector::neg(v);
            }
        }
        assert!(!validate_simplex(&c, &small).unwrap().passed(), "length {k}");
    }
}

#[test]
fn faces_commute_on_a_four_simplex() {
    let (c, s) = instance(80, 4);
    let small = big_to_small_unchecked(&c, &s).unwrap();
    for j in 0..=4 {
        assert_eq!(big_to_small_unchecked(&c, &big_face(&s, j).unwrap()).unwrap(), dgn_nerve::face(&c, &small, j).unwrap());
    }
}
