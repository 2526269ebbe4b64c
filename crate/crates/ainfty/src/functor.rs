//! A∞-functors: the functor equations, composition and identities.

use std::collections::HashMap;

use dgn_core::{vector, Scalar, Vector};

use crate::relations::{splice, RelationReport, Violation};
use crate::table::MultiTable;
use crate::{arg_spaces, basis_tuples, block_objects, object_strings, AInfError, AInfinity};

/// Anything with an object map and components `f_n` of degree `1−n`.
pub trait FunctorLike {
    fn object(&self, x: usize) -> usize;

    fn arity_cap(&self) -> usize;

    /// `f_n(args)` along the source object string `objs`.
    fn f(&self, objs: &[usize], args: &[&[Scalar]]) -> Vector;
}

/// A functor with components stored as coefficient tables per source object string.
#[derive(Clone, Debug)]
pub struct AInfFunctor {
    pub object_map: Vec<usize>,
    pub components: HashMap<Vec<usize>, MultiTable>,
    pub arity_cap: usize,
    /// dimensions of the target homs, needed to size zero results
    target_dims: HashMap<(usize, usize), usize>,
}

impl AInfFunctor {
    pub fn new(object_map: Vec<usize>, target: &dyn AInfinity, arity_cap: usize) -> Self {
        let k = target.num_objects();
        let mut target_dims = HashMap::new();
        for x in 0..k {
            for y in 0..k {
                target_dims.insert((x, y), target.hom(x, y).dim());
            }
        }
        AInfFunctor { object_map, components: HashMap::new(), arity_cap, target_dims }
    }

    pub fn target_dim(&self, objs: &[usize]) -> usize {
        let (a, b) = (self.object_map[objs[0]], self.object_map[objs[objs.len() - 1]]);
        self.target_dims.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Sets `f_n` on one basis tuple.
    pub fn set(&mut self, objs: &[usize], tuple: &[usize], value: Vector) -> Result<(), AInfError> {
        let n = objs.len() - 1;
        if n > self.arity_cap {
            return Err(AInfError::ArityCap { arity: n, cap: self.arity_cap });
        }
        if value.len() != self.target_dim(objs) {
            return Err(AInfError::Invalid("component value has the wrong length".into()));
        }
        let t = self.components.entry(objs.to_vec()).or_default();
        t.entries.remove(tuple);
        t.add(tuple.to_vec(), &value);
        Ok(())
    }

    pub fn get(&self, objs: &[usize], tuple: &[usize]) -> Option<&Vector> {
        self.components.get(objs)?.get(tuple)
    }
}

impl FunctorLike for AInfFunctor {
    fn object(&self, x: usize) -> usize {
        self.object_map[x]
    }

    fn arity_cap(&self) -> usize {
        self.arity_cap
    }

    fn f(&self, objs: &[usize], args: &[&[Scalar]]) -> Vector {
        let out = self.target_dim(objs);
        match self.components.get(objs) {
            Some(t) if args.len() <= self.arity_cap => t.eval(args, out),
            _ => vector::zeros(out),
        }
    }
}

/// `ε_r(i_1, …, i_r) = Σ_{k≥2} (1−i_k) Σ_{l<k} i_l`.
pub fn epsilon(sizes: &[usize]) -> i64 {
    let mut acc = 0i64;
    let mut before = 0i64;
    for (k, &i) in sizes.iter().enumerate() {
        if k > 0 {
            acc += (1 - i as i64) * before;
        }
        before += i as i64;
    }
    acc
}

/// Ordered partitions of `n` into parts of size at most `max_part`.
pub fn compositions(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n.min(max_part) {
        for mut rest in compositions(n - first, max_part) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `Σ (−1)^{ε_r} g_r(f_{i_1} ⊗ … ⊗ f_{i_r})` on homogeneous written-order
/// arguments, with the Koszul sign of the tensor of components. `f_block`
/// evaluates `f` on the block `(start, len)`.
fn composite_sum(
    g: &dyn Fn(&[usize], &[&[Scalar]]) -> Vector,
    g_cap: usize,
    f_cap: usize,
    f_object: &dyn Fn(usize) -> usize,
    objs: &[usize],
    args: &[(i32, Vector)],
    f_block: &mut dyn FnMut(usize, usize) -> Vector,
    out_dim: usize,
) -> Vector {
    let n = args.len();
    let mut out = vector::zeros(out_dim);
    let mut cache: HashMap<(usize, usize), Vector> = HashMap::new();
    for sizes in compositions(n, f_cap) {
        if sizes.len() > g_cap {
            continue;
        }
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut start = 0;
        let mut zero = false;
        for &len in &sizes {
            let v = cache.entry((start, len)).or_insert_with(|| f_block(start, len)).clone();
            zero |= vector::is_zero(&v);
            blocks.push(v);
            start += len;
        }
        if zero {
            continue;
        }
        // Koszul: f_{i_k} (degree 1−i_k) moves past the earlier blocks
        let mut e = epsilon(&sizes);
        let mut before = 0i64;
        let mut start = 0;
        for (k, &len) in sizes.iter().enumerate() {
            if k > 0 {
                e += (1 - len as i64) * before;
            }
            before += args[start..start + len].iter().map(|a| a.0 as i64).sum::<i64>();
            start += len;
        }
        // target object string through the cut points
        let mut cuts = vec![f_object(objs[0])];
        let mut pos = n;
        for &len in sizes.iter().rev() {
            pos -= len;
            cuts.push(f_object(objs[n - pos]));
        }
        let refs: Vec<&[Scalar]> = blocks.iter().map(|b| b.as_slice()).collect();
        let v = g(&cuts, &refs);
        vector::axpy(&mut out, &Scalar::sign(e), &v);
    }
    out
}

fn eval_block(f: &dyn FunctorLike, objs: &[usize], args: &[(i32, Vector)], start: usize, len: usize) -> Vector {
    let bo = block_objects(objs, start, len);
    let refs: Vec<&[Scalar]> = args[start..start + len].iter().map(|a| a.1.as_slice()).collect();
    f.f(&bo, &refs)
}

/// LHS − RHS of the functor equation on homogeneous arguments.
pub fn functor_defect(
    f: &dyn FunctorLike,
    src: &dyn AInfinity,
    tgt: &dyn AInfinity,
    objs: &[usize],
    args: &[(i32, Vector)],
) -> Vector {
    let n = args.len();
    let out_dim = tgt.hom(f.object(objs[0]), f.object(objs[n])).dim();
    let mut lhs = vector::zeros(out_dim);
    for s in 1..=n.min(src.arity_cap()) {
        for r in 0..=n - s {
            let t = n - r - s;
            if r + t + 1 > f.arity_cap() {
                continue;
            }
            let inner_args: Vec<&[Scalar]> = args[r..r + s].iter().map(|a| a.1.as_slice()).collect();
            let inner = src.m(&block_objects(objs, r, s), &inner_args);
            if vector::is_zero(&inner) {
                continue;
            }
            let left: i64 = args[..r].iter().map(|a| a.0 as i64).sum();
            let e = (s * r + t) as i64 + s as i64 * left;
            let mut outer: Vec<&[Scalar]> = args[..r].iter().map(|a| a.1.as_slice()).collect();
            outer.push(&inner);
            outer.extend(args[r + s..].iter().map(|a| a.1.as_slice()));
            vector::axpy(&mut lhs, &Scalar::sign(e), &f.f(&splice(objs, r, s), &outer));
        }
    }
    let rhs = composite_sum(
        &|o, a| tgt.m(o, a),
        tgt.arity_cap(),
        f.arity_cap(),
        &|x| f.object(x),
        objs,
        args,
        &mut |start, len| eval_block(f, objs, args, start, len),
        out_dim,
    );
    vector::sub(&lhs, &rhs)
}

fn basis_args(c: &dyn AInfinity, objs: &[usize], tuple: &[usize]) -> Vec<(i32, Vector)> {
    arg_spaces(c, objs)
        .iter()
        .zip(tuple)
        .map(|(s, &b)| (s.degree(b), vector::unit(s.dim(), b)))
        .collect()
}

/// Functor equations for `n ≤ n_max` on all basis tuples, plus strict unitality
/// (reported as violations with `n = 0` and the unit's object as the string).
pub fn check_functor(f: &dyn FunctorLike, src: &dyn AInfinity, tgt: &dyn AInfinity, n_max: usize) -> RelationReport {
    let mut report = RelationReport::default();
    for n in 1..=n_max {
        for objs in object_strings(src, n) {
            for tuple in basis_tuples(&arg_spaces(src, &objs)) {
                let d = functor_defect(f, src, tgt, &objs, &basis_args(src, &objs, &tuple));
                report.checked += 1;
                if !vector::is_zero(&d) {
                    report.violations.push(Violation { n, objects: objs.clone(), tuple, defect: d });
                }
            }
        }
    }
    for x in 0..src.num_objects() {
        let (Some(u), Some(u2)) = (src.unit(x), tgt.unit(f.object(x))) else { continue };
        let d = vector::sub(&f.f(&[x, x], &[&u]), &u2);
        report.checked += 1;
        if !vector::is_zero(&d) {
            report.violations.push(Violation { n: 0, objects: vec![x], tuple: vec![], defect: d });
        }
        // higher components vanish on any tuple containing a unit
        for n in 2..=f.arity_cap().min(n_max) {
            for objs in object_strings(src, n) {
                let spaces = arg_spaces(src, &objs);
                for p in 0..n {
                    if objs[n - 1 - p] != x || objs[n - p] != x {
                        continue;
                    }
                    let mut others = spaces.clone();
                    others.remove(p);
                    for rest in basis_tuples(&others) {
                        let mut args: Vec<Vector> =
                            rest.iter().zip(&others).map(|(&i, s)| vector::unit(s.dim(), i)).collect();
                        args.insert(p, u.clone());
                        let refs: Vec<&[Scalar]> = args.iter().map(|v| v.as_slice()).collect();
                        let v = f.f(&objs, &refs);
                        report.checked += 1;
                        if !vector::is_zero(&v) {
                            report.violations.push(Violation { n: 0, objects: objs.clone(), tuple: rest, defect: v });
                        }
                    }
                }
            }
        }
    }
    report
}

/// The identity functor: `f_1 = id`, nothing above.
pub fn identity_functor(c: &dyn AInfinity) -> AInfFunctor {
    let k = c.num_objects();
    let mut f = AInfFunctor::new((0..k).collect(), c, 1);
    for x in 0..k {
        for y in 0..k {
            let h = c.hom(x, y);
            for b in 0..h.dim() {
                f.set(&[x, y], &[b], vector::unit(h.dim(), b)).expect("arity 1 within cap");
            }
        }
    }
    f
}

/// `G∘F` with components `e_n = Σ (−1)^{ε_r} g_r(f_{i_1} ⊗ … ⊗ f_{i_r})`,
/// tabulated for `n ≤ cap` on the basis tuples of `src`. Components between
/// `cap` and `min(cap_F·cap_G, 2·cap)` are computed too and must vanish.
pub fn compose_functors(
    g: &dyn FunctorLike,
    f: &dyn FunctorLike,
    src: &dyn AInfinity,
    tgt: &dyn AInfinity,
    cap: usize,
) -> Result<AInfFunctor, AInfError> {
    let object_map = (0..src.num_objects()).map(|x| g.object(f.object(x))).collect();
    let mut e = AInfFunctor::new(object_map, tgt, cap);
    let overflow = (f.arity_cap() * g.arity_cap()).min(2 * cap);
    for n in 1..=overflow.max(cap) {
        for objs in object_strings(src, n) {
            let out_dim = tgt.hom(g.object(f.object(objs[0])), g.object(f.object(objs[n]))).dim();
            for tuple in basis_tuples(&arg_spaces(src, &objs)) {
                let args = basis_args(src, &objs, &tuple);
                let v = composite_sum(
                    &|o, a| g.f(o, a),
                    g.arity_cap(),
                    f.arity_cap(),
                    &|x| f.object(x),
                    &objs,
                    &args,
                    &mut |start, len| eval_block(f, &objs, &args, start, len),
                    out_dim,
                );
                if vector::is_zero(&v) {
                    continue;
                }
                if n > cap {
                    return Err(AInfError::ArityCap { arity: n, cap });
                }
                e.set(&objs, &tuple, v)?;
            }
        }
    }
    Ok(e)
}
