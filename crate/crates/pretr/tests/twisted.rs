mod common;

use common::{category, instance, rng};
use dgn_ainfty::AInfinity;
use dgn_core::{compose_hom, vector, Scalar};
use dgn_pretr::twisted::{tw_sub, TwElement};
use dgn_pretr::{
    cone_tw, random_twisted, shift_tw, tw_compose, tw_differential, tw_hom, validate_twisted, PretrError, TwHom,
    TwistedComplex,
};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn one_component_tw_hom_is_the_hom_complex() {
    let mut r = rng(1);
    let c = category(&mut r);
    for x in 0..3 {
        for y in 0..3 {
            let tw = tw_hom(&c, &TwistedComplex::embed(x), &TwistedComplex::embed(y)).unwrap();
            assert_eq!(tw, c.hom_space(x, y).complex());
        }
    }
}

#[test]
fn same_position_twist_needs_only_a_closed_map() {
    let mut r = rng(2);
    let c = category(&mut r);
    let (x, y) = (0, 1);
    let h = c.hom(x, y);
    let closed = TwHom::new(&c, &TwistedComplex::embed(x), &TwistedComplex::embed(y)).unwrap();
    for i in h.basis_in_degree(1) {
        let q = vector::unit(h.dim(), i);
        let k = TwistedComplex { components: vec![(0, x), (0, y)], q: TwElement::from([((0, 1), q.clone())]) };
        let report = validate_twisted(&c, &k).unwrap();
        let is_closed = vector::is_zero(&c.d(x, y, &q));
        assert_eq!(report.passed(), is_closed);
    }
    let z = closed.d_matrix(1).unwrap().kernel();
    for q in z.columns() {
        let q = closed.to_blocks(1, &q).remove(&(0, 0)).unwrap();
        let k = TwistedComplex { components: vec![(0, x), (0, y)], q: TwElement::from([((0, 1), q)]) };
        assert!(validate_twisted(&c, &k).unwrap().passed());
    }
}

#[test]
fn wrong_degree_is_an_error() {
    let mut r = rng(3);
    let c = category(&mut r);
    let (x, y) = (0, 1);
    let h = c.hom(x, y);
    let Some(&i) = h.basis_in_degree(0).first() else { return };
    // positions 0 → 0 need degree 1
    let k = TwistedComplex {
        components: vec![(0, x), (0, y)],
        q: TwElement::from([((0, 1), vector::unit(h.dim(), i))]),
    };
    assert_eq!(validate_twisted(&c, &k), Err(PretrError::Degree { from: 0, to: 1, expected: 1, got: Some(0) }));
}

#[test]
fn shift_and_cone_of_embedded_objects() {
    let mut r = rng(4);
    let c = category(&mut r);
    let shifted = shift_tw(&TwistedComplex::embed(2), 1);
    assert_eq!(shifted.components, vec![(-1, 2)]);
    let f = c.random_closed(0, 1, &mut r);
    let cone = cone_tw(&c, &TwistedComplex::embed(0), &TwistedComplex::embed(1), &TwElement::from([((0, 0), f.clone())]))
        .unwrap();
    assert_eq!(cone.components, vec![(-1, 0), (0, 1)]);
    let expected: TwElement = if vector::is_zero(&f) { TwElement::new() } else { TwElement::from([((0, 1), f)]) };
    assert_eq!(cone.q, expected);
    assert!(validate_twisted(&c, &cone).unwrap().passed());
}

#[test]
fn cone_of_an_open_map_is_rejected() {
    for seed in 0..20 {
        let mut r = rng(seed);
        let c = category(&mut r);
        let h = c.hom_space(0, 1);
        let range = h.degree_range(0);
        for i in range {
            let f = vector::unit(h.dim(), i);
            if vector::is_zero(&c.d(0, 1, &f)) {
                continue;
            }
            let (k, kp) = (TwistedComplex::embed(0), TwistedComplex::embed(1));
            assert_eq!(cone_tw(&c, &k, &kp, &TwElement::from([((0, 0), f)])), Err(PretrError::NotClosed));
            return;
        }
    }
    panic!("no open degree-0 map found");
}

#[test]
fn shift_and_cone_preserve_maurer_cartan() {
    let mut cones = 0;
    for seed in 0..50 {
        let mut r = rng(100 + seed);
        let c = category(&mut r);
        let k = random_twisted(&c, r.gen_range(0..=2), &mut r).unwrap();
        let kp = random_twisted(&c, r.gen_range(0..=1), &mut r).unwrap();
        assert!(validate_twisted(&c, &k).unwrap().passed(), "seed {seed}");
        for n in -2..=2 {
            assert!(validate_twisted(&c, &shift_tw(&k, n)).unwrap().passed());
        }
        let f = TwHom::new(&c, &k, &kp).unwrap().random_closed(0, &mut r).unwrap();
        let cone = cone_tw(&c, &k, &kp, &f).unwrap();
        assert!(validate_twisted(&c, &cone).unwrap().passed(), "seed {seed}");
        cones += usize::from(!f.is_empty());
        // tw_hom is checked for d² = 0 on construction
        tw_hom(&c, &k, &kp).unwrap();
        tw_hom(&c, &cone, &k).unwrap();
        tw_hom(&c, &kp, &cone).unwrap();
    }
    assert!(cones > 10, "only {cones} nonzero cone maps");
}

#[test]
fn broken_twist_is_reported() {
    for seed in 0..30 {
        let mut r = rng(200 + seed);
        let c = category(&mut r);
        let mut k = random_twisted(&c, 2, &mut r).unwrap();
        let Some((&key, v)) = k.q.iter().next() else { continue };
        let h = c.hom(k.object(key.0), k.object(key.1));
        let deg = k.position(key.0) - k.position(key.1) + 1;
        let Some(&i) = h.basis_in_degree(deg).first() else { continue };
        let mut w = v.clone();
        w[i] += &Scalar::from_int(7);
        k.q.insert(key, w);
        if !validate_twisted(&c, &k).unwrap().passed() {
            return;
        }
    }
    panic!("perturbing q never broke Maurer-Cartan");
}

#[test]
fn cone_of_identity_is_a_zero_object() {
    for seed in 0..25 {
        let mut r = rng(300 + seed);
        let c = category(&mut r);
        let k = random_twisted(&c, r.gen_range(0..=1), &mut r).unwrap();
        let id = k.identity(&c).unwrap();
        let cone = cone_tw(&c, &k, &k, &id).unwrap();
        for z in 0..3 {
            let ez = TwistedComplex::embed(z);
            assert!(tw_hom(&c, &cone, &ez).unwrap().is_acyclic(), "seed {seed}");
            assert!(tw_hom(&c, &ez, &cone).unwrap().is_acyclic(), "seed {seed}");
        }
    }
}

fn random_element(h: &TwHom, k: i32, r: &mut impl Rng) -> TwElement {
    h.to_blocks(k, &dgn_core::random::vector(dgn_core::Field::Rational, h.dim(k), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn twisted_composition_is_associative_and_leibniz(seed in 0u64..10_000) {
        let mut r = rng(seed);
        let c = category(&mut r);
        let ks: Vec<TwistedComplex> = (0..4).map(|_| random_twisted(&c, r.gen_range(0..=1), &mut r).unwrap()).collect();
        let h01 = TwHom::new(&c, &ks[0], &ks[1]).unwrap();
        let h12 = TwHom::new(&c, &ks[1], &ks[2]).unwrap();
        let h23 = TwHom::new(&c, &ks[2], &ks[3]).unwrap();
        let (a, b, d) = (r.gen_range(-2..=1), r.gen_range(-2..=1), r.gen_range(-2..=1));
        let f = random_element(&h01, a, &mut r);
        let g = random_element(&h12, b, &mut r);
        let h = random_element(&h23, d, &mut r);
        let gf = tw_compose(&c, &ks[0], &ks[1], &ks[2], &g, &f, a);
        let hg = tw_compose(&c, &ks[1], &ks[2], &ks[3], &h, &g, b);
        let left = tw_compose(&c, &ks[0], &ks[2], &ks[3], &h, &gf, a + b);
        let right = tw_compose(&c, &ks[0], &ks[1], &ks[3], &hg, &f, a);
        prop_assert!(tw_sub(&left, &right).is_empty());
        // D(g·f) = D(g)·f + (−1)^{|g|} g·D(f)
        let lhs = tw_differential(&c, &ks[0], &ks[2], &gf, a + b);
        let dg = tw_differential(&c, &ks[1], &ks[2], &g, b);
        let df = tw_differential(&c, &ks[0], &ks[1], &f, a);
        let mut rhs = tw_compose(&c, &ks[0], &ks[1], &ks[2], &dg, &f, a);
        for (key, v) in tw_compose(&c, &ks[0], &ks[1], &ks[2], &g, &df, a + 1) {
            let slot = rhs.entry(key).or_insert_with(|| vector::zeros(v.len()));
            vector::axpy(slot, &Scalar::sign(b as i64), &v);
        }
        prop_assert!(tw_sub(&lhs, &rhs).is_empty());
    }

    #[test]
    fn tw_hom_squares_to_zero_on_random_twisted_complexes(seed in 0u64..10_000) {
        let mut r = rng(seed);
        let c = category(&mut r);
        let k = random_twisted(&c, r.gen_range(0..=2), &mut r).unwrap();
        let kp = random_twisted(&c, r.gen_range(0..=2), &mut r).unwrap();
        let h = TwHom::new(&c, &k, &kp).unwrap();
        if let Some((lo, hi)) = h.window() {
            for deg in lo..hi {
                let dd = h.d_matrix(deg + 1).unwrap().mul(&h.d_matrix(deg).unwrap()).unwrap();
                prop_assert!(dd.is_zero());
            }
        }
    }
}

/// The displayed twisted differential read with the unshifted `m₁` and plain
/// composition: `m₁(f) + Σ (q′∘f + (−1)^{l(i−m+1)} f∘q)`. On `Hom(Cone(f), Z)`
/// it sends `g` to `(m₁g, g∘f)` and squares to `2 m₁(g)∘f`.
#[test]
fn displayed_differential_with_unshifted_hom_does_not_square_to_zero() {
    let mut failures = 0;
    for seed in 0..20 {
        let (c, x, y, f, z) = instance(&mut rng(400 + seed));
        let (hy, hx) = (c.hom_space(y, z), c.hom_space(x, z));
        let xy = c.hom_space(x, y);
        for k in hy.degrees() {
            for i in hy.degree_range(k) {
                let g = vector::unit(hy.dim(), i);
                // D(D(g)) in the Hom(X, Z) block: m₁(g)∘f + m₁(g∘f)
                let dg = c.d(y, z, &g);
                let mut second = compose_hom(hy, &dg, xy, &f, hx);
                let gf = compose_hom(hy, &g, xy, &f, hx);
                vector::axpy(&mut second, &Scalar::one(), &c.d(x, z, &gf));
                failures += usize::from(!vector::is_zero(&second));
            }
        }
    }
    assert!(failures > 0);
}
