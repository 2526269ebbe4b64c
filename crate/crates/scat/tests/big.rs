mod common;

use dgn_ainfty::{AInfCategory, AInfinity};
use dgn_core::{vector, ChainComplex, GradedSpace, Grading, Matrix, Scalar};
use dgn_pretr::ChainDgCategory;
use dgn_scat::flags::{interval_chains, parse_flag_key};
use dgn_scat::{
    big_degeneracy, big_face, constant_big_simplex, flag_key, random_big_simplex, required_flags, validate_big_simplex,
    validate_big_simplex_with, BigNerveSimplex, Relation, ScatError,
};
use std::collections::BTreeMap;

#[test]
fn flag_keys_round_trip() {
    for f in required_flags(4) {
        assert_eq!(parse_flag_key(&flag_key(&f)).unwrap(), f);
    }
    assert_eq!(flag_key(&[vec![0, 3], vec![0, 1, 3]]), "0.3|0.1.3");
}

#[test]
fn flag_counts_of_small_intervals() {
    // strict chains of length l+1 in the subsets of r points are the maps
    // from the points to 0..=l+1 hitting every middle value
    let chains = |r: u32| -> i64 {
        (0..=r as i64)
            .map(|l| (0..=l).map(|t| (-1i64).pow(t as u32) * binomial(l, t) * (l + 2 - t).pow(r)).sum::<i64>())
            .sum()
    };
    for span in 1..=5usize {
        assert_eq!(interval_chains(0, span).len() as i64, chains(span as u32 - 1));
    }
    assert_eq!(chains(3), 51);
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn a_closed_map_is_a_valid_one_simplex() {
    let mut r = common::rng(1);
    let c = common::category(&mut r);
    let f = c.random_closed(0, 1, &mut r);
    let s = constant_big_simplex(&c, vec![0, 1], &[f]).unwrap();
    assert_eq!(s.data.len(), 1);
    assert!(validate_big_simplex(&c, &s).unwrap().passed());
}

#[test]
fn strictly_commuting_data_is_valid() {
    let mut r = common::rng(2);
    let c = common::category(&mut r);
    let objects = vec![0, 1, 2, 0];
    let maps: Vec<_> = objects.windows(2).map(|w| c.random_closed(w[0], w[1], &mut r)).collect();
    let s = constant_big_simplex(&c, objects, &maps).unwrap();
    let report = validate_big_simplex(&c, &s).unwrap();
    assert!(report.passed(), "{:?}", report.defects);
    assert_eq!((report.faces_checked, report.compositions_checked), (20, 8));
}

#[test]
fn random_simplices_validate() {
    for seed in 0..8 {
        let mut r = common::rng(100 + seed);
        let c = common::category(&mut r);
        let n = 1 + seed as usize % 3;
        let objects = common::objects(&c, n, &mut r);
        let s = random_big_simplex(&c, objects, &mut r).unwrap();
        let report = validate_big_simplex(&c, &s).unwrap();
        assert!(report.passed(), "seed {seed}: {:?}", report.defects);
    }
}

#[test]
fn random_four_simplex_validates() {
    let mut r = common::rng(7);
    let c = common::category(&mut r);
    let objects = common::objects(&c, 4, &mut r);
    let s = random_big_simplex(&c, objects, &mut r).unwrap();
    assert_eq!(s.data.len(), required_flags(4).len());
    assert!(validate_big_simplex(&c, &s).unwrap().passed());
}

fn random_three_simplex(seed: u64) -> (dgn_pretr::ChainDgCategory, BigNerveSimplex) {
    let mut r = common::rng(seed);
    let c = common::category(&mut r);
    let objects = common::objects(&c, 3, &mut r);
    let s = random_big_simplex(&c, objects, &mut r).unwrap();
    (c, s)
}

fn bump(s: &mut BigNerveSimplex, key: &str) {
    let f = parse_flag_key(key).unwrap();
    let v = s.data.get_mut(&f).unwrap();
    v[0] = &v[0] + &Scalar::one();
}

#[test]
fn perturbing_a_generator_breaks_its_faces() {
    let (c, mut s) = random_three_simplex(11);
    bump(&mut s, "0.3|0.1.3");
    let report = validate_big_simplex(&c, &s).unwrap();
    assert!(!report.passed());
    assert!(report.defects.iter().all(|d| matches!(d, Relation::Face { .. })));
    assert!(report.defects.iter().any(|d| d.to_string().contains("0.3|0.1.3")));
}

#[test]
fn perturbing_a_composite_breaks_its_composition() {
    let (c, mut s) = random_three_simplex(12);
    bump(&mut s, "0.2.3");
    let report = validate_big_simplex(&c, &s).unwrap();
    assert!(report.defects.contains(&Relation::Composition { flag: "0.2.3".into(), through: 2 }));
}

#[test]
fn perturbing_a_vertex_breaks_a_named_relation() {
    let (c, mut s) = random_three_simplex(13);
    bump(&mut s, "0.3");
    let names: Vec<String> = validate_big_simplex(&c, &s).unwrap().defects.iter().map(|d| d.to_string()).collect();
    assert!(names.contains(&"face d_1 at 0.3|0.1.3".to_string()), "{names:?}");
}

#[test]
fn explicit_degenerate_entries_are_checked() {
    let (c, mut s) = random_three_simplex(14);
    let cache = dgn_scat::MapCache::new(&c, &s.objects, 3).unwrap();
    let flag = vec![vec![0, 3], vec![0, 3]];
    let good = dgn_scat::flag_value(&c, &cache, &s, &flag).unwrap();
    s.data.insert(flag.clone(), good.clone());
    let report = validate_big_simplex(&c, &s).unwrap();
    assert!(report.passed());
    assert_eq!(report.degeneracies_checked, 1);
    let mut bad = good;
    bad[0] = &bad[0] + &Scalar::one();
    s.data.insert(flag, bad);
    assert_eq!(validate_big_simplex(&c, &s).unwrap().defects, vec![Relation::Degeneracy { flag: "0.3|0.3".into() }]);
}

#[test]
fn faces_and_degeneracies_of_valid_simplices_are_valid() {
    let (c, s) = random_three_simplex(15);
    for t in 0..=3 {
        assert!(validate_big_simplex(&c, &big_face(&s, t).unwrap()).unwrap().passed());
    }
    for t in 0..=2 {
        let d = big_face(&s, 3).unwrap();
        assert!(validate_big_simplex(&c, &big_degeneracy(&c, &d, t).unwrap()).unwrap().passed());
    }
}

#[test]
fn shape_errors() {
    let (c, s) = random_three_simplex(16);
    let mut outside = s.clone();
    outside.data.insert(vec![vec![0, 5]], vector::zeros(1));
    assert!(matches!(validate_big_simplex(&c, &outside), Err(ScatError::FlagRange(k)) if k == "0.5"));
    let mut missing = s.clone();
    missing.data.remove(&vec![vec![1, 3], vec![1, 2, 3]]);
    assert!(matches!(validate_big_simplex(&c, &missing), Err(ScatError::MissingFlag(k)) if k == "1.3|1.2.3"));
    assert!(matches!(validate_big_simplex_with(&c, &s, 2), Err(ScatError::LevelCap { level: 3, cap: 2 })));
    let mut short = s;
    short.data.insert(vec![vec![0, 1]], Vec::new());
    assert!(matches!(validate_big_simplex(&c, &short), Err(ScatError::Length { .. })));
}

#[test]
fn non_dg_input_is_rejected() {
    let mut homs = BTreeMap::new();
    for (i, j) in [(0, 0), (0, 1), (1, 1)] {
        homs.insert((i, j), GradedSpace::new(vec![(format!("e{i}{j}"), 0)]).unwrap());
    }
    let a = AInfCategory::new(vec!["a".into(), "b".into()], homs, 3);
    assert!(!a.is_dg());
    let s = BigNerveSimplex { n: 1, objects: vec![0, 1], data: BTreeMap::new() };
    assert!(matches!(validate_big_simplex(&a, &s), Err(ScatError::NotDg)));
}

#[test]
fn negative_cohomology_can_obstruct_random_fillers() {
    // X = 𝕂 in degree 0 and Y = 𝕂 in degree −1 give H^{−1} Hom(X, Y) = 𝕂
    let point = |lo: i32| ChainComplex::new(Grading::Cochain, lo, vec![1], vec![Matrix::zeros(0, 1)]).unwrap();
    let c = ChainDgCategory::new(vec!["X".into(), "Y".into()], vec![point(0), point(-1)]);
    let mut outcomes = (0, 0);
    for seed in 0..6 {
        let mut r = common::rng(200 + seed);
        match random_big_simplex(&c, vec![0, 0, 0, 1], &mut r) {
            Ok(s) => {
                assert!(validate_big_simplex(&c, &s).unwrap().passed());
                outcomes.0 += 1;
            }
            Err(ScatError::Obstructed(_)) => outcomes.1 += 1,
            Err(e) => panic!("{e}"),
        }
    }
    assert!(outcomes.1 > 0, "{outcomes:?}");
}
