mod common;

use common::functors_agree;
use dgn_ainfty::{check_functor, check_relations, check_strict_units, compose_functors, identity_functor, AInfinity};
use dgn_core::Scalar;
use dgn_nerve::{codegeneracy_functor, coface_functor, standard_simplex_category};

#[test]
fn standard_simplices_are_strictly_unital_dg_categories() {
    for n in 0..=6 {
        let c = standard_simplex_category(n);
        assert!(check_relations(&c, 4).passed(), "n = {n}");
        assert!(check_strict_units(&c).is_empty(), "n = {n}");
        for i in 0..=n {
            for j in 0..=n {
                assert_eq!(c.hom(i, j).dim(), usize::from(i <= j));
            }
        }
    }
}

#[test]
fn composition_in_delta_two() {
    let c = standard_simplex_category(2);
    let one = [Scalar::one()];
    assert_eq!(c.m(&[0, 1, 2], &[&one, &one]), vec![Scalar::one()]);
    assert_eq!(c.hom(0, 2).label(0), "(0,2)");
    assert_eq!(standard_simplex_category(0).hom(0, 0).dim(), 1);
}

#[test]
fn coface_one_sends_01_to_02() {
    let d = coface_functor(1, 2).unwrap();
    assert_eq!(d.object_map, vec![0, 2]);
    assert_eq!(d.get(&[0, 1], &[0]), Some(&vec![Scalar::one()]));
    assert!(coface_functor(3, 2).is_err());
    assert!(codegeneracy_functor(2, 2).is_err());
}

#[test]
fn cofaces_and_codegeneracies_are_functors() {
    for n in 1..=4 {
        for j in 0..=n {
            let d = coface_functor(j, n).unwrap();
            let r = check_functor(&d, &standard_simplex_category(n - 1), &standard_simplex_category(n), 3);
            assert!(r.passed());
        }
        for j in 0..n {
            let s = codegeneracy_functor(j, n).unwrap();
            let r = check_functor(&s, &standard_simplex_category(n), &standard_simplex_category(n - 1), 3);
            assert!(r.passed());
        }
    }
}

fn compose(g: &dgn_ainfty::AInfFunctor, f: &dgn_ainfty::AInfFunctor, src_n: usize, tgt_n: usize) -> dgn_ainfty::AInfFunctor {
    compose_functors(g, f, &standard_simplex_category(src_n), &standard_simplex_category(tgt_n), 2).unwrap()
}

#[test]
fn cosimplicial_identities() {
    for n in 2..=5 {
        let src = standard_simplex_category(n - 2);
        // δ_j δ_i = δ_i δ_{j−1}, i < j, as maps [n−2] → [n]
        for j in 0..=n {
            for i in 0..j {
                let lhs = compose(&coface_functor(j, n).unwrap(), &coface_functor(i, n - 1).unwrap(), n - 2, n);
                let rhs = compose(&coface_functor(i, n).unwrap(), &coface_functor(j - 1, n - 1).unwrap(), n - 2, n);
                assert!(functors_agree(&lhs, &rhs, &src, 2), "δδ n={n} i={i} j={j}");
            }
        }
    }
    for n in 1..=5 {
        let base = standard_simplex_category(n - 1);
        // σ_j δ_j = σ_j δ_{j+1} = id on [n−1]
        for j in 0..n {
            let id = identity_functor(&base);
            let a = compose(&codegeneracy_functor(j, n).unwrap(), &coface_functor(j, n).unwrap(), n - 1, n - 1);
            let b = compose(&codegeneracy_functor(j, n).unwrap(), &coface_functor(j + 1, n).unwrap(), n - 1, n - 1);
            assert!(functors_agree(&a, &id, &base, 2));
            assert!(functors_agree(&b, &id, &base, 2));
        }
    }
    for n in 2..=5 {
        let src = standard_simplex_category(n);
        // σ_j σ_i = σ_i σ_{j+1}, i ≤ j, as maps [n] → [n−2]
        for j in 0..n - 1 {
            for i in 0..=j {
                let lhs = compose(&codegeneracy_functor(j, n - 1).unwrap(), &codegeneracy_functor(i, n).unwrap(), n, n - 2);
                let rhs = compose(&codegeneracy_functor(i, n - 1).unwrap(), &codegeneracy_functor(j + 1, n).unwrap(), n, n - 2);
                assert!(functors_agree(&lhs, &rhs, &src, 2), "σσ n={n} i={i} j={j}");
            }
        }
        // σ_j δ_i = δ_i σ_{j−1} for i < j, and δ_{i−1} σ_j for i > j + 1, as maps [n−1] → [n−1]
        let src = standard_simplex_category(n - 1);
        for j in 0..n {
            for i in 0..=n {
                let lhs = compose(&codegeneracy_functor(j, n).unwrap(), &coface_functor(i, n).unwrap(), n - 1, n - 1);
                let rhs = if i < j {
                    compose(&coface_functor(i, n - 1).unwrap(), &codegeneracy_functor(j - 1, n - 1).unwrap(), n - 1, n - 1)
                } else if i > j + 1 {
                    compose(&coface_functor(i - 1, n - 1).unwrap(), &codegeneracy_functor(j, n - 1).unwrap(), n - 1, n - 1)
                } else {
                    continue;
                };
                assert!(functors_agree(&lhs, &rhs, &src, 2), "σδ n={n} i={i} j={j}");
            }
        }
    }
}
