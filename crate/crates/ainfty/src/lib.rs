//! A∞-categories and A∞-functors.
//!
//! Conventions used throughout the workspace:
//!
//! * `m_n` takes its arguments in written order. For an object string
//!   `objs = [x_0, …, x_n]`, `args[0] ∈ Hom(x_{n−1}, x_n)` and
//!   `args[n−1] ∈ Hom(x_0, x_1)`; the result lies in `Hom(x_0, x_n)`.
//! * The A∞ relations are `Σ (−1)^{sr+t} m_{r+t+1}(Id^r ⊗ m_s ⊗ Id^t) = 0`
//!   where the tensor of maps carries the Koszul sign.
//! * Functor equations use the sign `ε_r(i_1, …, i_r) = Σ_{k≥2} (1−i_k) Σ_{l<k} i_l`.

pub mod bar;
pub mod category;
pub mod functor;
pub mod gauge;
pub mod h0;
pub mod relations;
pub mod table;

use dgn_core::{CoreError, GradedSpace, Scalar, Vector};
use thiserror::Error;

pub use bar::{bar_convert, check_bar_relations, BarData};
pub use category::{materialize, AInfCategory};
pub use functor::{check_functor, compose_functors, epsilon, identity_functor, AInfFunctor, FunctorLike};
pub use h0::{h0_category, H0Category};
pub use relations::{check_relations, check_strict_units, RelationReport, Violation};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AInfError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("unknown object {0}")]
    UnknownObject(usize),
    #[error("coefficient breaks the degree constraint: {0}")]
    Degree(String),
    #[error("arity {arity} exceeds the cap {cap}")]
    ArityCap { arity: usize, cap: usize },
    #[error("{0}")]
    Invalid(String),
}

/// Anything that behaves like an A∞-category with finitely many objects.
pub trait AInfinity {
    fn num_objects(&self) -> usize;

    fn object_label(&self, x: usize) -> String {
        x.to_string()
    }

    fn hom(&self, x: usize, y: usize) -> &GradedSpace;

    /// `m_n` vanishes for `n` above this.
    fn arity_cap(&self) -> usize;

    fn unit(&self, x: usize) -> Option<Vector>;

    /// `m_n(args)` for `n = args.len()` along `objs` (see the crate docs).
    fn m(&self, objs: &[usize], args: &[&[Scalar]]) -> Vector;

    fn is_dg(&self) -> bool {
        self.arity_cap() <= 2
    }
}

/// The object string spanned by the written-order block `args[start..start+len]`
/// of an `n`-ary input along `objs`.
pub fn block_objects(objs: &[usize], start: usize, len: usize) -> Vec<usize> {
    let n = objs.len() - 1;
    objs[n - start - len..=n - start].to_vec()
}

/// Object strings `x_0 … x_n` whose consecutive homs are all nonzero.
pub fn object_strings(c: &dyn AInfinity, n: usize) -> Vec<Vec<usize>> {
    let k = c.num_objects();
    let mut out: Vec<Vec<usize>> = (0..k).map(|x| vec![x]).collect();
    for _ in 0..n {
        let mut next = Vec::new();
        for s in &out {
            let last = *s.last().expect("strings are nonempty");
            for y in 0..k {
                if c.hom(last, y).dim() > 0 {
                    let mut t = s.clone();
                    t.push(y);
                    next.push(t);
                }
            }
        }
        out = next;
    }
    out
}

/// Hom spaces of the written-order arguments along `objs`.
pub fn arg_spaces<'a>(c: &'a dyn AInfinity, objs: &[usize]) -> Vec<&'a GradedSpace> {
    let n = objs.len() - 1;
    (0..n).map(|k| c.hom(objs[n - 1 - k], objs[n - k])).collect()
}

/// All basis tuples for the given argument spaces (first argument slowest).
pub fn basis_tuples(spaces: &[&GradedSpace]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for s in spaces {
        let mut next = Vec::with_capacity(out.len() * s.dim());
        for t in &out {
            for i in 0..s.dim() {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

/// `(−1)^e` helper re-exported for sign bookkeeping.
pub fn sign(e: i64) -> Scalar {
    Scalar::sign(e)
}
