//! The suspended description `b_i = s∘m_i∘(s^{−1})^{⊗i}`.
//!
//! Basis indices are shared with the original category; only degrees move
//! (`|s a| = |a| − 1`). On written-order basis inputs,
//! `b_i(sa_1, …, sa_i) = (−1)^{Σ_l (i−l)(|a_l|−1)} s m_i(a_1, …, a_i)`,
//! the sign being the Koszul sign of `(s^{−1})^{⊗i}`.

use std::collections::{BTreeMap, HashMap};

use dgn_core::{suspend, vector, GradedSpace, Scalar, Vector};

use crate::category::AInfCategory;
use crate::relations::{splice, RelationReport, Violation};
use crate::table::MultiTable;
use crate::{arg_spaces, basis_tuples, block_objects, object_strings, AInfinity};

#[derive(Clone, Debug)]
pub struct BarData {
    pub objects: Vec<String>,
    homs: HashMap<(usize, usize), GradedSpace>,
    zero: GradedSpace,
    pub maps: HashMap<Vec<usize>, MultiTable>,
    pub units: Vec<Option<Vector>>,
    pub arity_cap: usize,
}

impl AInfinity for BarData {
    fn num_objects(&self) -> usize {
        self.objects.len()
    }

    fn hom(&self, x: usize, y: usize) -> &GradedSpace {
        self.homs.get(&(x, y)).unwrap_or(&self.zero)
    }

    fn arity_cap(&self) -> usize {
        self.arity_cap
    }

    fn unit(&self, _x: usize) -> Option<Vector> {
        None
    }

    /// `b_n` (not `m_n`) on written-order arguments.
    fn m(&self, objs: &[usize], args: &[&[Scalar]]) -> Vector {
        let out = self.hom(objs[0], objs[objs.len() - 1]).dim();
        match self.maps.get(objs) {
            Some(t) => t.eval(args, out),
            None => vector::zeros(out),
        }
    }
}

/// Sign relating `b` and `m` on a tuple with unsuspended degrees `degs`.
fn conversion_sign(degs: &[i32]) -> Scalar {
    let i = degs.len() as i64;
    let e: i64 = degs.iter().enumerate().map(|(l, &d)| (i - 1 - l as i64) * (d as i64 - 1)).sum();
    Scalar::sign(e)
}

fn convert_tables(
    maps: &HashMap<Vec<usize>, MultiTable>,
    degree_of: &dyn Fn(&[usize], &[usize]) -> Vec<i32>,
) -> HashMap<Vec<usize>, MultiTable> {
    let mut out = HashMap::new();
    for (objs, table) in maps {
        let mut t = MultiTable::default();
        for (tuple, v) in &table.entries {
            let s = conversion_sign(&degree_of(objs, tuple));
            t.add(tuple.clone(), &vector::scale(&s, v));
        }
        out.insert(objs.clone(), t);
    }
    out
}

fn tuple_degrees(c: &dyn AInfinity, objs: &[usize], tuple: &[usize], shift: i32) -> Vec<i32> {
    arg_spaces(c, objs).iter().zip(tuple).map(|(s, &b)| s.degree(b) + shift).collect()
}

pub fn bar_convert(c: &AInfCategory) -> BarData {
    let mut homs = HashMap::new();
    for (&(x, y), h) in c.homs() {
        homs.insert((x, y), suspend(h).0);
    }
    let maps = convert_tables(&c.maps, &|objs, tuple| tuple_degrees(c, objs, tuple, 0));
    BarData {
        objects: c.objects.clone(),
        homs,
        zero: GradedSpace::zero(),
        maps,
        units: c.units.clone(),
        arity_cap: c.arity_cap,
    }
}

/// Inverse of [`bar_convert`]; the sign is its own inverse.
pub fn from_bar(b: &BarData) -> AInfCategory {
    let mut homs = BTreeMap::new();
    for (&(x, y), h) in &b.homs {
        let basis = (0..h.dim())
            .map(|i| {
                let l = h.label(i);
                let inner = l.strip_prefix("s(").and_then(|s| s.strip_suffix(')')).unwrap_or(l);
                (inner.to_string(), h.degree(i) + 1)
            })
            .collect();
        homs.insert((x, y), GradedSpace::new(basis).expect("labels mirror a valid space"));
    }
    let mut c = AInfCategory::new(b.objects.clone(), homs, b.arity_cap);
    c.units = b.units.clone();
    c.maps = convert_tables(&b.maps, &|objs, tuple| tuple_degrees(b, objs, tuple, 1));
    c
}

/// `Σ b_{r+t+1}(Id^r ⊗ b_s ⊗ Id^t)` with the Koszul sign of `b_s` (degree +1)
/// passing the first `r` suspended inputs.
pub fn bar_relation_defect(b: &BarData, objs: &[usize], args: &[(i32, Vector)]) -> Vector {
    let n = args.len();
    let cap = b.arity_cap;
    let mut out = vector::zeros(b.hom(objs[0], objs[n]).dim());
    for s in 1..=n.min(cap) {
        for r in 0..=n - s {
            let t = n - r - s;
            if r + t + 1 > cap {
                continue;
            }
            let inner_args: Vec<&[Scalar]> = args[r..r + s].iter().map(|a| a.1.as_slice()).collect();
            let inner = b.m(&block_objects(objs, r, s), &inner_args);
            if vector::is_zero(&inner) {
                continue;
            }
            let e: i64 = args[..r].iter().map(|a| a.0 as i64).sum();
            let mut outer: Vec<&[Scalar]> = args[..r].iter().map(|a| a.1.as_slice()).collect();
            outer.push(&inner);
            outer.extend(args[r + s..].iter().map(|a| a.1.as_slice()));
            vector::axpy(&mut out, &Scalar::sign(e), &b.m(&splice(objs, r, s), &outer));
        }
    }
    out
}

pub fn check_bar_relations(b: &BarData, n_max: usize) -> RelationReport {
    let mut report = RelationReport::default();
    let live = n_max.min(2 * b.arity_cap - 1);
    for n in 1..=live {
        for objs in object_strings(b, n) {
            let spaces = arg_spaces(b, &objs);
            for tuple in basis_tuples(&spaces) {
                let args: Vec<(i32, Vector)> =
                    spaces.iter().zip(&tuple).map(|(s, &i)| (s.degree(i), vector::unit(s.dim(), i))).collect();
                let d = bar_relation_defect(b, &objs, &args);
                report.checked += 1;
                if !vector::is_zero(&d) {
                    report.violations.push(Violation { n, objects: objs.clone(), tuple, defect: d });
                }
            }
        }
    }
    report
}
