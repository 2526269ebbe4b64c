//! Cones in the chain dg-category: the mapping cone complex and the two
//! block hom complexes out of and into it.
//!
//! With the twisted differential of this crate the cross entries are
//! `(−1)^{k+1}(−∘f)` on `Hom^k(Y,Z) ⊕ Hom^{k−1}(X,Z)` and `(−1)^{k+1}(f∘−)` on
//! `Hom^k(Z,Y) ⊕ Hom^{k+1}(Z,X)`. The `printed` variants use `(−1)^k(−∘f)`
//! and an unsigned `f∘−`; the first is isomorphic to ours through `−1` on the
//! `Hom(X,Z)` summand, the second does not square to zero.

use dgn_core::{vector, ChainComplex, Grading, Matrix, Scalar, Vector};

use crate::chain::ChainDgCategory;
use crate::PretrError;

/// Errors unless `f ∈ Hom⁰(x, y)` is closed.
pub fn check_closed(c: &ChainDgCategory, x: usize, y: usize, f: &[Scalar]) -> Result<(), PretrError> {
    let h = c.hom_space(x, y);
    if f.len() != h.dim() {
        return Err(PretrError::Core(dgn_core::CoreError::DimensionMismatch { expected: h.dim(), got: f.len() }));
    }
    let degree_ok = vector::is_zero(f) || h.space().homogeneous_degree(f) == Some(0);
    if !degree_ok || !vector::is_zero(&c.d(x, y, f)) {
        return Err(PretrError::NotClosed);
    }
    Ok(())
}

/// The cochain mapping cone `Cone^n = X^{n+1} ⊕ Y^n` with
/// `d(a, b) = (−d a, f a + d b)`.
pub fn mapping_cone(c: &ChainDgCategory, x: usize, y: usize, f: &[Scalar]) -> Result<ChainComplex, PretrError> {
    check_closed(c, x, y, f)?;
    let (cx, cy) = (&c.objects[x], &c.objects[y]);
    let h = c.hom_space(x, y);
    let lo = (cx.lo - 1).min(cy.lo);
    let hi = (cx.hi() - 1).max(cy.hi());
    let dim = |n: i32| cx.dim(n + 1) + cy.dim(n);
    let mut dims = Vec::new();
    let mut d = Vec::new();
    for n in lo..=hi {
        dims.push(dim(n));
        let mut m = Matrix::zeros(if n == hi { 0 } else { dim(n + 1) }, dim(n));
        if n < hi {
            let (ax, ay) = (cx.dim(n + 1), cx.dim(n + 2));
            m.set_block(0, 0, &cx.d_out(n + 1).neg());
            m.set_block(ay, 0, &h.block(f, 0, n + 1));
            m.set_block(ay, ax, &cy.d_out(n));
        }
        d.push(m);
    }
    Ok(ChainComplex::new(Grading::Cochain, lo, dims, d)?)
}

struct Layout {
    lo: i32,
    hi: i32,
}

/// Builds a two-block complex from the block dimensions and a column map.
fn assemble(
    layout: Layout,
    first: impl Fn(i32) -> usize,
    second: impl Fn(i32) -> usize,
    image: impl Fn(i32, &[Scalar], &[Scalar]) -> (Vector, Vector),
    checked: bool,
) -> Result<ChainComplex, PretrError> {
    let mut dims = Vec::new();
    let mut d = Vec::new();
    for k in layout.lo..=layout.hi {
        let (p, q) = (first(k), second(k));
        dims.push(p + q);
        let rows = if k == layout.hi { 0 } else { first(k + 1) + second(k + 1) };
        let mut cols = Vec::new();
        for i in 0..p + q {
            let e = vector::unit(p + q, i);
            if k == layout.hi {
                cols.push(Vec::new());
                continue;
            }
            let (u, v) = image(k, &e[..p], &e[p..]);
            cols.push(u.into_iter().chain(v).collect());
        }
        d.push(Matrix::from_columns(&cols, rows));
    }
    let c = if checked {
        ChainComplex::new(Grading::Cochain, layout.lo, dims, d)?
    } else {
        ChainComplex::new_unchecked(Grading::Cochain, layout.lo, dims, d)?
    };
    Ok(c)
}

fn window(ranges: &[(i32, i32)]) -> Layout {
    let lo = ranges.iter().map(|r| r.0).min().unwrap_or(0);
    let hi = ranges.iter().map(|r| r.1).max().unwrap_or(-1);
    Layout { lo, hi }
}

fn degree_window(c: &ChainDgCategory, x: usize, y: usize, shift: i32) -> (i32, i32) {
    let ks = c.hom_space(x, y).degrees();
    match (ks.first(), ks.last()) {
        (Some(&lo), Some(&hi)) => (lo + shift, hi + shift),
        _ => (0, -1),
    }
}

fn out_of_cone(
    c: &ChainDgCategory,
    x: usize,
    y: usize,
    f: &[Scalar],
    z: usize,
    sign: impl Fn(i32) -> Scalar,
    checked: bool,
) -> Result<ChainComplex, PretrError> {
    let (yz, xz) = (c.hom_space(y, z), c.hom_space(x, z));
    let layout = window(&[degree_window(c, y, z, 0), degree_window(c, x, z, 1)]);
    let first = |k: i32| yz.degree_range(k).len();
    let second = |k: i32| xz.degree_range(k - 1).len();
    let image = |k: i32, g: &[Scalar], h: &[Scalar]| {
        let g = if g.is_empty() { vector::zeros(yz.dim()) } else { yz.from_slice(k, g) };
        let h = if h.is_empty() { vector::zeros(xz.dim()) } else { xz.from_slice(k - 1, h) };
        let top = yz.slice(&c.d(y, z, &g), k + 1);
        let mut bottom = c.d(x, z, &h);
        vector::axpy(&mut bottom, &sign(k), &c.compose(x, y, z, &g, f));
        (top, xz.slice(&bottom, k))
    };
    assemble(layout, first, second, image, checked)
}

fn into_cone(
    c: &ChainDgCategory,
    x: usize,
    y: usize,
    f: &[Scalar],
    z: usize,
    sign: impl Fn(i32) -> Scalar,
    checked: bool,
) -> Result<ChainComplex, PretrError> {
    let (zy, zx) = (c.hom_space(z, y), c.hom_space(z, x));
    let layout = window(&[degree_window(c, z, y, 0), degree_window(c, z, x, -1)]);
    let first = |k: i32| zy.degree_range(k).len();
    let second = |k: i32| zx.degree_range(k + 1).len();
    let image = |k: i32, g: &[Scalar], h: &[Scalar]| {
        let g = if g.is_empty() { vector::zeros(zy.dim()) } else { zy.from_slice(k, g) };
        let h = if h.is_empty() { vector::zeros(zx.dim()) } else { zx.from_slice(k + 1, h) };
        let mut top = c.d(z, y, &g);
        vector::axpy(&mut top, &sign(k), &c.compose(z, x, y, f, &h));
        (zy.slice(&top, k + 1), zx.slice(&c.d(z, x, &h), k + 2))
    };
    assemble(layout, first, second, image, checked)
}

/// `Hom(Cone(f), Z)` on `Hom^k(Y,Z) ⊕ Hom^{k−1}(X,Z)` and `Hom(Z, Cone(f))`
/// on `Hom^k(Z,Y) ⊕ Hom^{k+1}(Z,X)`, in the hom spaces' degree coordinates.
pub fn cone_hom_matrices(
    c: &ChainDgCategory,
    x: usize,
    y: usize,
    f: &[Scalar],
    z: usize,
) -> Result<(ChainComplex, ChainComplex), PretrError> {
    check_closed(c, x, y, f)?;
    let sign = |k: i32| Scalar::sign((k + 1) as i64);
    Ok((out_of_cone(c, x, y, f, z, sign, true)?, into_cone(c, x, y, f, z, sign, true)?))
}

/// The same block complexes with the cross entries `(−1)^k(−∘f)` and `f∘−`,
/// built without the `d² = 0` check.
pub fn printed_cone_hom_matrices(
    c: &ChainDgCategory,
    x: usize,
    y: usize,
    f: &[Scalar],
    z: usize,
) -> Result<(ChainComplex, ChainComplex), PretrError> {
    check_closed(c, x, y, f)?;
    let out = out_of_cone(c, x, y, f, z, |k| Scalar::sign(k as i64), false)?;
    let into = into_cone(c, x, y, f, z, |_| Scalar::one(), false)?;
    Ok((out, into))
}
