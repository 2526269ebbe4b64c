//! The A∞ relations and the strict unit axioms, expanded over basis tuples.

use dgn_core::{vector, Scalar, Vector};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::{arg_spaces, basis_tuples, block_objects, object_strings, AInfinity};

/// One failed equation: arity, object string, basis tuple (written order) and the nonzero defect.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub n: usize,
    pub objects: Vec<usize>,
    pub tuple: Vec<usize>,
    pub defect: Vector,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RelationReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: RelationReport) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }
}

/// Replaces the written-order block `args[r..r+s]` by `inner`, returning the
/// outer object string and argument list.
pub(crate) fn splice(objs: &[usize], r: usize, s: usize) -> Vec<usize> {
    let n = objs.len() - 1;
    let mut outer = objs[..=n - r - s].to_vec();
    outer.extend_from_slice(&objs[n - r..]);
    outer
}

/// `Σ_{r+s+t=n} (−1)^{sr+t} m_{r+t+1}(Id^r ⊗ m_s ⊗ Id^t)` on homogeneous
/// arguments `(degree, vector)` in written order.
pub fn relation_defect(c: &dyn AInfinity, objs: &[usize], args: &[(i32, Vector)]) -> Vector {
    let n = args.len();
    let cap = c.arity_cap();
    let mut out = vector::zeros(c.hom(objs[0], objs[n]).dim());
    for s in 1..=n.min(cap) {
        for r in 0..=n - s {
            let t = n - r - s;
            if r + t + 1 > cap {
                continue;
            }
            let inner_objs = block_objects(objs, r, s);
            let inner_args: Vec<&[Scalar]> = args[r..r + s].iter().map(|a| a.1.as_slice()).collect();
            let inner = c.m(&inner_objs, &inner_args);
            if vector::is_zero(&inner) {
                continue;
            }
            let left: i64 = args[..r].iter().map(|a| a.0 as i64).sum();
            let e = (s * r + t) as i64 + s as i64 * left;
            let outer_objs = splice(objs, r, s);
            let mut outer_args: Vec<&[Scalar]> = args[..r].iter().map(|a| a.1.as_slice()).collect();
            outer_args.push(&inner);
            outer_args.extend(args[r + s..].iter().map(|a| a.1.as_slice()));
            let v = c.m(&outer_objs, &outer_args);
            vector::axpy(&mut out, &Scalar::sign(e), &v);
        }
    }
    out
}

fn basis_args(c: &dyn AInfinity, objs: &[usize], tuple: &[usize]) -> Vec<(i32, Vector)> {
    arg_spaces(c, objs)
        .iter()
        .zip(tuple)
        .map(|(s, &b)| (s.degree(b), vector::unit(s.dim(), b)))
        .collect()
}

fn check_tuples(
    c: &dyn AInfinity,
    n: usize,
    objs: &[usize],
    tuples: Vec<Vec<usize>>,
    report: &mut RelationReport,
) {
    for tuple in tuples {
        let d = relation_defect(c, objs, &basis_args(c, objs, &tuple));
        report.checked += 1;
        if !vector::is_zero(&d) {
            report.violations.push(Violation { n, objects: objs.to_vec(), tuple, defect: d });
        }
    }
}

/// Every relation with `n ≤ n_max` inputs on every basis tuple.
pub fn check_relations(c: &dyn AInfinity, n_max: usize) -> RelationReport {
    let mut report = RelationReport::default();
    // with m_{>cap} = 0 every term vanishes once n ≥ 2·cap
    let live = n_max.min(2 * c.arity_cap() - 1);
    for n in 1..=live {
        for objs in object_strings(c, n) {
            let tuples = basis_tuples(&arg_spaces(c, &objs));
            check_tuples(c, n, &objs, tuples, &mut report);
        }
    }
    report
}

/// Like [`check_relations`] but with at most `per_string` random tuples per object string.
pub fn check_relations_sampled(c: &dyn AInfinity, n_max: usize, per_string: usize, rng: &mut impl Rng) -> RelationReport {
    let mut report = RelationReport::default();
    let live = n_max.min(2 * c.arity_cap() - 1);
    for n in 1..=live {
        for objs in object_strings(c, n) {
            let mut tuples = basis_tuples(&arg_spaces(c, &objs));
            tuples.shuffle(rng);
            tuples.truncate(per_string);
            check_tuples(c, n, &objs, tuples, &mut report);
        }
    }
    report
}

/// A failed unit axiom.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitViolation {
    pub object: usize,
    pub reason: String,
}

/// Checks `m_2(1⊗v) = v = m_2(v⊗1)`, `m_1(1) = 0` and `m_n(…⊗1⊗…) = 0` for `3 ≤ n ≤ cap`.
pub fn check_strict_units(c: &dyn AInfinity) -> Vec<UnitViolation> {
    let mut bad = Vec::new();
    let k = c.num_objects();
    for x in 0..k {
        let Some(u) = c.unit(x) else {
            bad.push(UnitViolation { object: x, reason: "no unit".into() });
            continue;
        };
        if !vector::is_zero(&c.m(&[x, x], &[&u])) {
            bad.push(UnitViolation { object: x, reason: "m_1(1) ≠ 0".into() });
        }
        for y in 0..k {
            let into = c.hom(y, x);
            for b in 0..into.dim() {
                let e = vector::unit(into.dim(), b);
                if c.m(&[y, x, x], &[&u, &e]) != e {
                    bad.push(UnitViolation { object: x, reason: format!("m_2(1, {}) ≠ {}", into.label(b), into.label(b)) });
                }
            }
            let out = c.hom(x, y);
            for b in 0..out.dim() {
                let e = vector::unit(out.dim(), b);
                if c.m(&[x, x, y], &[&e, &u]) != e {
                    bad.push(UnitViolation { object: x, reason: format!("m_2({}, 1) ≠ {}", out.label(b), out.label(b)) });
                }
            }
        }
    }
    for n in 3..=c.arity_cap() {
        for objs in object_strings(c, n) {
            let spaces = arg_spaces(c, &objs);
            for p in 0..n {
                // position p is Hom(objs[n−1−p], objs[n−p])
                let (a, b) = (objs[n - 1 - p], objs[n - p]);
                if a != b {
                    continue;
                }
                let Some(u) = c.unit(a) else { continue };
                let mut others: Vec<&dgn_core::GradedSpace> = spaces.clone();
                others.remove(p);
                for rest in basis_tuples(&others) {
                    let mut args: Vec<Vector> =
                        rest.iter().zip(&others).map(|(&i, s)| vector::unit(s.dim(), i)).collect();
                    args.insert(p, u.clone());
                    let refs: Vec<&[Scalar]> = args.iter().map(|v| v.as_slice()).collect();
                    if !vector::is_zero(&c.m(&objs, &refs)) {
                        bad.push(UnitViolation { object: a, reason: format!("m_{n} with a unit in slot {p} is nonzero") });
                    }
                }
            }
        }
    }
    bad
}
