//! Generators of genuinely non-dg A∞-categories.
//!
//! Start from a dg-category, keep a directed subcategory (objects in a line,
//! only scalar endomorphisms, nothing going backwards) and transport the
//! structure along a functor with `f_1 = id` and random higher components.
//! Solving the functor equation for the `r = n` term defines `m'_n`
//! recursively; on a directed category with `N` objects nothing above arity
//! `N − 1` survives, so a cap of `N − 1` loses no information.

use std::collections::BTreeMap;

use dgn_core::{vector, GradedSpace, Scalar, Vector};
use rand::Rng;

use crate::category::AInfCategory;
use crate::functor::{functor_defect, AInfFunctor};
use crate::{arg_spaces, basis_tuples, object_strings, AInfError, AInfinity};

/// The directed subcategory on `order`: `Hom(a, b)` is the ambient hom for
/// `a < b`, the span of the unit for `a = b`, and zero for `a > b`.
pub fn directed(c: &dyn AInfinity, order: &[usize]) -> Result<AInfCategory, AInfError> {
    let k = order.len();
    let mut homs = BTreeMap::new();
    for a in 0..k {
        homs.insert((a, a), GradedSpace::new(vec![("1".into(), 0)]).expect("one label"));
        for b in a + 1..k {
            homs.insert((a, b), c.hom(order[a], order[b]).clone());
        }
    }
    let labels = order.iter().enumerate().map(|(a, &x)| format!("{}#{a}", c.object_label(x))).collect();
    let mut out = AInfCategory::new(labels, homs, c.arity_cap());
    let mut units = Vec::with_capacity(k);
    for a in 0..k {
        let u = c.unit(order[a]).ok_or_else(|| AInfError::Invalid(format!("object {} has no unit", order[a])))?;
        units.push(u);
        out.set_unit(a, vec![Scalar::one()])?;
    }
    for n in 1..=c.arity_cap() {
        for objs in object_strings(&out, n) {
            let spaces: Vec<GradedSpace> = arg_spaces(&out, &objs).into_iter().cloned().collect();
            let refs: Vec<&GradedSpace> = spaces.iter().collect();
            for tuple in basis_tuples(&refs) {
                // lift into the ambient category
                let args: Vec<Vector> = (0..n)
                    .map(|p| {
                        let (a, b) = (objs[n - 1 - p], objs[n - p]);
                        if a == b {
                            units[a].clone()
                        } else {
                            vector::unit(spaces[p].dim(), tuple[p])
                        }
                    })
                    .collect();
                let arefs: Vec<&[Scalar]> = args.iter().map(|v| v.as_slice()).collect();
                let ambient: Vec<usize> = objs.iter().map(|&a| order[a]).collect();
                let v = c.m(&ambient, &arefs);
                let value = if objs[0] == objs[n] {
                    // only units along the string; the result must be a multiple of the unit
                    let u = &units[objs[0]];
                    let i = vector::support(u)[0];
                    let lambda = v[i].div(&u[i])?;
                    if vector::sub(&v, &vector::scale(&lambda, u)).iter().any(|x| !x.is_zero()) {
                        return Err(AInfError::Invalid("endomorphism string leaves the span of the unit".into()));
                    }
                    vec![lambda]
                } else {
                    v
                };
                if !vector::is_zero(&value) {
                    out.set_m(&objs, &tuple, value)?;
                }
            }
        }
    }
    Ok(out)
}

/// Random higher components `f_n` (`2 ≤ n ≤ max_arity`) on unit-free tuples
/// of a directed category, with `f_1 = id`.
pub fn random_gauge(d: &AInfCategory, max_arity: usize, density: f64, rng: &mut impl Rng) -> AInfFunctor {
    let k = d.num_objects();
    let mut f = crate::functor::identity_functor(d);
    f.arity_cap = max_arity.max(1);
    for n in 2..=max_arity {
        for objs in object_strings(d, n) {
            if objs.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let spaces = arg_spaces(d, &objs);
            let target = d.hom(objs[0], objs[n]);
            for tuple in basis_tuples(&spaces) {
                let deg: i32 = spaces.iter().zip(&tuple).map(|(s, &b)| s.degree(b)).sum::<i32>() + 1 - n as i32;
                let mut v = vector::zeros(target.dim());
                for b in target.basis_in_degree(deg) {
                    if rng.gen_bool(density) {
                        v[b] = Scalar::from_int(rng.gen_range(-2..=2));
                    }
                }
                if !vector::is_zero(&v) {
                    f.set(&objs, &tuple, v).expect("within cap");
                }
            }
        }
    }
    debug_assert_eq!(f.object_map.len(), k);
    f
}

/// Transports the structure of `d` along `f` (identity on objects, `f_1 = id`):
/// returns `d'` such that `f: d → d'` satisfies the functor equations.
pub fn gauge_transform(d: &AInfCategory, f: &AInfFunctor, cap: usize) -> Result<AInfCategory, AInfError> {
    let k = d.num_objects();
    let mut homs = BTreeMap::new();
    for x in 0..k {
        for y in 0..k {
            homs.insert((x, y), d.hom(x, y).clone());
        }
    }
    let mut out = AInfCategory::new(d.objects.clone(), homs, cap);
    out.units = d.units.clone();
    for n in 1..=cap {
        for objs in object_strings(d, n) {
            let spaces: Vec<GradedSpace> = arg_spaces(d, &objs).into_iter().cloned().collect();
            let refs: Vec<&GradedSpace> = spaces.iter().collect();
            let mut values = Vec::new();
            for tuple in basis_tuples(&refs) {
                let args: Vec<(i32, Vector)> =
                    spaces.iter().zip(&tuple).map(|(s, &b)| (s.degree(b), vector::unit(s.dim(), b))).collect();
                // the only missing term is m'_n(a) itself
                let v = functor_defect(f, d, &out, &objs, &args);
                if !vector::is_zero(&v) {
                    values.push((tuple, v));
                }
            }
            for (tuple, v) in values {
                out.set_m(&objs, &tuple, v)?;
            }
        }
    }
    Ok(out)
}
