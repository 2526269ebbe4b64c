mod common;

use common::*;
use dgn_ainfty::bar::from_bar;
use dgn_ainfty::gauge::{directed, gauge_transform, random_gauge};
use dgn_ainfty::h0::check_well_defined;
use dgn_ainfty::{bar_convert, check_bar_relations, check_relations, h0_category, AInfinity};
use dgn_core::{hom_complex, vector, ChainComplex, Field, Grading, Matrix};
use dgn_pretr::ChainDgCategory;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn bar_round_trip_is_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let c = table(&small_chain_category(&mut rng, 2));
    let back = from_bar(&bar_convert(&c));
    for objs in dgn_ainfty::object_strings(&c, 2) {
        for tuple in dgn_ainfty::basis_tuples(&dgn_ainfty::arg_spaces(&c, &objs)) {
            assert_eq!(back.get_m(&objs, &tuple), c.get_m(&objs, &tuple));
        }
    }
    for x in 0..c.num_objects() {
        for y in 0..c.num_objects() {
            assert_eq!(back.hom(x, y).degrees(), c.hom(x, y).degrees());
        }
    }
}

#[test]
fn every_b_has_degree_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let c = small_chain_category(&mut rng, 3);
    let d = directed(&c, &[0, 1, 2, 0]).unwrap();
    let f = random_gauge(&d, 3, 0.6, &mut rng);
    let b = bar_convert(&gauge_transform(&d, &f, 3).unwrap());
    for (objs, t) in &b.maps {
        let spaces = dgn_ainfty::arg_spaces(&b, objs);
        let target = b.hom(objs[0], objs[objs.len() - 1]);
        for (tuple, v) in &t.entries {
            let input: i32 = spaces.iter().zip(tuple).map(|(s, &i)| s.degree(i)).sum();
            assert_eq!(target.homogeneous_degree(v), Some(input + 1));
        }
    }
}

#[test]
fn bar_relations_hold_on_a_gauged_category() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let c = small_chain_category(&mut rng, 2);
    let d = directed(&c, &[0, 1, 0, 1]).unwrap();
    let f = random_gauge(&d, 3, 0.6, &mut rng);
    let d2 = gauge_transform(&d, &f, 3).unwrap();
    assert!(check_relations(&d2, 5).passed());
    assert!(check_bar_relations(&bar_convert(&d2), 5).passed());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// The two sign systems flag exactly the same (string, tuple) pairs.
    #[test]
    fn bar_and_m_defects_vanish_together(seed in any::<u64>(), arity in 1usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut t = table(&small_chain_category(&mut rng, 2));
        perturb(&mut t, arity, &mut rng);
        let a = check_relations(&t, 3);
        let b = check_bar_relations(&bar_convert(&t), 3);
        let key = |r: &dgn_ainfty::RelationReport| {
            let mut v: Vec<_> = r.violations.iter().map(|v| (v.objects.clone(), v.tuple.clone())).collect();
            v.sort();
            v
        };
        prop_assert_eq!(a.checked, b.checked);
        prop_assert_eq!(key(&a), key(&b));
    }
}

#[test]
fn h0_of_zero_differential_objects_is_the_degree_zero_part() {
    // d = 0: every degree-0 map is a cycle and nothing is a boundary
    let x = ChainComplex::new(Grading::Cochain, 0, vec![2, 1], vec![Matrix::zeros(1, 2), Matrix::zeros(0, 1)]).unwrap();
    let y = ChainComplex::new(Grading::Cochain, 0, vec![1, 3], vec![Matrix::zeros(3, 1), Matrix::zeros(0, 3)]).unwrap();
    let c = ChainDgCategory::new(vec!["X".into(), "Y".into()], vec![x, y]);
    let h = h0_category(&c).unwrap();
    assert_eq!(h.dim(0, 1), 2 * 1 + 1 * 3);
    assert_eq!(h.dim(1, 0), 1 * 2 + 3 * 1);
    assert_eq!(h.dim(0, 0), 2 * 2 + 1 * 1);
    assert_eq!(h.dim(1, 1), 1 * 1 + 3 * 3);
}

#[test]
fn h0_dimensions_match_the_hom_complex() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let c = small_chain_category(&mut rng, 3);
    let h = h0_category(&c).unwrap();
    for x in 0..3 {
        for y in 0..3 {
            let oracle = hom_complex(&c.objects[x], &c.objects[y]);
            assert_eq!(h.dim(x, y), oracle.homology_dim(0), "({x},{y})");
        }
    }
}

#[test]
fn h0_identity_classes_are_units() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let c = small_chain_category(&mut rng, 2);
    let h = h0_category(&c).unwrap();
    for x in 0..2 {
        let id = c.unit(x).unwrap();
        let cls = h.homs[&(x, x)].classify(&id).unwrap();
        for y in 0..2 {
            let hy = &h.homs[&(x, y)];
            for j in 0..hy.dim {
                let v = c.m(&[x, x, y], &[&hy.rep(j), &id]);
                assert_eq!(hy.classify(&v).unwrap(), vector::unit(hy.dim, j));
            }
        }
        assert!(!vector::is_zero(&cls) || h.dim(x, x) == 0);
    }
}

#[test]
fn h0_composition_is_well_defined_on_gauged_categories() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let c = small_chain_category(&mut rng, 3);
    assert!(check_well_defined(&c, &h0_category(&c).unwrap(), &mut rng, 60).unwrap());
    let d = directed(&c, &[0, 1, 2]).unwrap();
    let f = random_gauge(&d, 2, 0.7, &mut rng);
    let d2 = gauge_transform(&d, &f, 2).unwrap();
    let h = h0_category(&d2).unwrap();
    assert!(check_well_defined(&d2, &h, &mut rng, 60).unwrap());
}

#[test]
fn h0_over_a_prime_field() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let shapes = vec![dgn_pretr::ObjectShape { lo: 0, dims: vec![2, 2] }; 2];
    let c = dgn_pretr::random_chain_category(Field::Prime(3), &shapes, &mut rng);
    let h = h0_category(&c).unwrap();
    assert_eq!(h.dim(0, 1), hom_complex(&c.objects[0], &c.objects[1]).homology_dim(0));
}
