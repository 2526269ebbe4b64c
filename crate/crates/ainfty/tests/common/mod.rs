#![allow(dead_code)]

use std::collections::BTreeMap;

use dgn_ainfty::{materialize, AInfCategory, AInfinity};
use dgn_core::{vector, Field, GradedSpace, Scalar, Vector};
use dgn_pretr::{random_chain_category, ChainDgCategory, ObjectShape};
use rand::Rng;

/// The linear category of the poset 0 < 1 < … < n, built by hand.
pub fn path_category(n: usize) -> AInfCategory {
    let mut homs = BTreeMap::new();
    for i in 0..=n {
        for j in i..=n {
            homs.insert((i, j), GradedSpace::new(vec![(format!("({i}{j})"), 0)]).unwrap());
        }
    }
    let mut c = AInfCategory::new((0..=n).map(|i| i.to_string()).collect(), homs, 2);
    for i in 0..=n {
        c.set_unit(i, vec![Scalar::one()]).unwrap();
        for j in i..=n {
            for k in j..=n {
                c.set_m(&[i, j, k], &[0, 0], vec![Scalar::one()]).unwrap();
            }
        }
    }
    c
}

pub fn small_chain_category(rng: &mut impl Rng, objects: usize) -> ChainDgCategory {
    let shapes: Vec<ObjectShape> = (0..objects)
        .map(|i| ObjectShape { lo: -(i as i32 % 2), dims: vec![1 + i % 2, 1] })
        .collect();
    random_chain_category(Field::Rational, &shapes, rng)
}

pub fn basis_args(c: &dyn AInfinity, objs: &[usize], tuple: &[usize]) -> Vec<Vector> {
    dgn_ainfty::arg_spaces(c, objs).iter().zip(tuple).map(|(s, &b)| vector::unit(s.dim(), b)).collect()
}

fn m(c: &dyn AInfinity, objs: &[usize], args: &[&Vector]) -> Vector {
    let refs: Vec<&[Scalar]> = args.iter().map(|v| v.as_slice()).collect();
    c.m(objs, &refs)
}

/// Direct dg axioms (d² = 0, Leibniz, associativity) on all basis tuples,
/// written out by hand rather than through the general relation sum.
pub fn dg_axioms_hold(c: &dyn AInfinity) -> bool {
    let k = c.num_objects();
    for x in 0..k {
        for y in 0..k {
            let h = c.hom(x, y);
            for a in 0..h.dim() {
                let e = vector::unit(h.dim(), a);
                let dd = m(c, &[x, y], &[&m(c, &[x, y], &[&e])]);
                if !vector::is_zero(&dd) {
                    return false;
                }
            }
        }
    }
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                let (hf, hg) = (c.hom(x, y), c.hom(y, z));
                for a in 0..hg.dim() {
                    for b in 0..hf.dim() {
                        let (ea, eb) = (vector::unit(hg.dim(), a), vector::unit(hf.dim(), b));
                        let lhs = m(c, &[x, z], &[&m(c, &[x, y, z], &[&ea, &eb])]);
                        let t1 = m(c, &[x, y, z], &[&m(c, &[y, z], &[&ea]), &eb]);
                        let t2 = m(c, &[x, y, z], &[&ea, &m(c, &[x, y], &[&eb])]);
                        let s = Scalar::sign(hg.degree(a) as i64);
                        let rhs = vector::add(&t1, &vector::scale(&s, &t2));
                        if lhs != rhs {
                            return false;
                        }
                        for w in 0..k {
                            let hh = c.hom(z, w);
                            for q in 0..hh.dim() {
                                let eq = vector::unit(hh.dim(), q);
                                let l = m(c, &[x, y, w], &[&m(c, &[y, z, w], &[&eq, &ea]), &eb]);
                                let r = m(c, &[x, z, w], &[&eq, &m(c, &[x, y, z], &[&ea, &eb])]);
                                if l != r {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// Adds ±1 to one random coordinate of one random stored `m_n` value, in the
/// degree that value already has. Returns false when the table is empty.
pub fn perturb(c: &mut AInfCategory, arity: usize, rng: &mut impl Rng) -> bool {
    let mut keys: Vec<(Vec<usize>, Vec<usize>)> = c
        .maps
        .iter()
        .filter(|(objs, _)| objs.len() == arity + 1)
        .flat_map(|(objs, t)| t.entries.keys().map(move |tu| (objs.clone(), tu.clone())))
        .collect();
    keys.sort();
    if keys.is_empty() {
        return false;
    }
    let (objs, tuple) = keys[rng.gen_range(0..keys.len())].clone();
    let mut v = c.get_m(&objs, &tuple).unwrap().clone();
    let h = c.hom(objs[0], objs[arity]);
    let deg = h.homogeneous_degree(&v).unwrap();
    let slots = h.basis_in_degree(deg);
    let i = slots[rng.gen_range(0..slots.len())];
    v[i] = &v[i] + &Scalar::from_int(if rng.gen_bool(0.5) { 1 } else { -1 });
    c.set_m(&objs, &tuple, v).unwrap();
    true
}

pub fn table(c: &dyn AInfinity) -> AInfCategory {
    materialize(c)
}
