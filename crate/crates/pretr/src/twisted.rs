//! One-sided and general twisted complexes over a dg-category.
//!
//! A component sits at an integer position `i` and stands for `K_i[−i]`.
//! Several components may share a position (a direct sum there). Morphisms
//! are matrices of hom elements; an entry from a component at position `i`
//! to one at position `j` of internal degree `l` has total degree
//! `k = l + j − i`.
//!
//! Matrix composition carries a sign: for `f` from position `i` to `j` of
//! internal degree `l` and `g` from `j` to `m`,
//! `(g·f) = (−1)^{(m−j)l} m₂(g, f)`. With it `m₁` is a derivation for total
//! degrees, composition is associative, and the twisted differential is
//! `D(f) = m₁(f) + q′·f − (−1)^k f·q`. Written out on components this is
//! `m₁(f) + Σ_m (−1)^{(m−j)l} m₂(q′_{jm}, f) − Σ_m (−1)^{k+(j−i)(m−i+1)} m₂(f, q_{mi})`
//! and the Maurer-Cartan equation reads
//! `m₁(q_{ip}) + Σ_j (−1)^{(p−j)(i−j+1)} m₂(q_{jp}, q_{ij}) = 0`.

use std::collections::BTreeMap;

use dgn_ainfty::AInfinity;
use dgn_core::{random, vector, ChainComplex, Field, Grading, Matrix, Scalar, Vector};
use rand::Rng;

use crate::PretrError;

/// Hom matrices keyed by `(source component, target component)`.
pub type TwElement = BTreeMap<(usize, usize), Vector>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedComplex {
    /// `(position, object)` per component.
    pub components: Vec<(i32, usize)>,
    /// `q[(a, b)] ∈ Hom^{pos_a − pos_b + 1}(K_a, K_b)`.
    pub q: TwElement,
}

impl TwistedComplex {
    /// `ε(x)`: the object alone in position 0.
    pub fn embed(x: usize) -> Self {
        TwistedComplex { components: vec![(0, x)], q: TwElement::new() }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn position(&self, a: usize) -> i32 {
        self.components[a].0
    }

    pub fn object(&self, a: usize) -> usize {
        self.components[a].1
    }

    /// `Id_K`.
    pub fn identity(&self, c: &dyn AInfinity) -> Result<TwElement, PretrError> {
        let mut out = TwElement::new();
        for (a, &(_, x)) in self.components.iter().enumerate() {
            out.insert((a, a), c.unit(x).ok_or(PretrError::NoUnit(x))?);
        }
        Ok(out)
    }
}

fn add_into(out: &mut TwElement, key: (usize, usize), c: &Scalar, v: &[Scalar]) {
    let len = v.len();
    let slot = out.entry(key).or_insert_with(|| vector::zeros(len));
    vector::axpy(slot, c, v);
}

/// Drops zero entries.
pub fn prune(e: &TwElement) -> TwElement {
    e.iter().filter(|(_, v)| !vector::is_zero(v)).map(|(k, v)| (*k, v.clone())).collect()
}

pub fn tw_is_zero(e: &TwElement) -> bool {
    e.values().all(|v| vector::is_zero(v))
}

pub fn tw_sub(a: &TwElement, b: &TwElement) -> TwElement {
    let mut out = a.clone();
    for (k, v) in b {
        add_into(&mut out, *k, &-Scalar::one(), v);
    }
    prune(&out)
}

/// `g·f` for `f : src → mid` of total degree `f_degree` and `g : mid → tgt`.
pub fn tw_compose(
    c: &dyn AInfinity,
    src: &TwistedComplex,
    mid: &TwistedComplex,
    tgt: &TwistedComplex,
    g: &TwElement,
    f: &TwElement,
    f_degree: i32,
) -> TwElement {
    let mut out = TwElement::new();
    for (&(a, m), fv) in f {
        let l = f_degree - mid.position(m) + src.position(a);
        for (&(m2, b), gv) in g.range((m, 0)..(m + 1, 0)) {
            debug_assert_eq!(m, m2);
            let sign = Scalar::sign(((tgt.position(b) - mid.position(m)) * l) as i64);
            let objs = [src.object(a), mid.object(m), tgt.object(b)];
            let value = c.m(&objs, &[gv, fv]);
            add_into(&mut out, (a, b), &sign, &value);
        }
    }
    prune(&out)
}

/// Componentwise `m₁`.
fn tw_m1(c: &dyn AInfinity, src: &TwistedComplex, tgt: &TwistedComplex, f: &TwElement) -> TwElement {
    let mut out = TwElement::new();
    for (&(a, b), v) in f {
        out.insert((a, b), c.m(&[src.object(a), tgt.object(b)], &[v]));
    }
    prune(&out)
}

/// `D(f) = m₁(f) + q′·f − (−1)^k f·q` for `f : K → K′` of total degree `k`.
pub fn tw_differential(
    c: &dyn AInfinity,
    src: &TwistedComplex,
    tgt: &TwistedComplex,
    f: &TwElement,
    k: i32,
) -> TwElement {
    let mut out = tw_m1(c, src, tgt, f);
    for (key, v) in tw_compose(c, src, tgt, tgt, &tgt.q, f, k) {
        add_into(&mut out, key, &Scalar::one(), &v);
    }
    for (key, v) in tw_compose(c, src, src, tgt, f, &src.q, 1) {
        add_into(&mut out, key, &-Scalar::sign(k as i64), &v);
    }
    prune(&out)
}

/// Maurer-Cartan defects of a twisted complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McReport {
    pub pairs_checked: usize,
    /// `(a, b)` with `m₁(q_{ab}) + Σ q·q ≠ 0`, and the defect.
    pub defects: Vec<((usize, usize), Vector)>,
}

impl McReport {
    pub fn passed(&self) -> bool {
        self.defects.is_empty()
    }
}

fn check_components(c: &dyn AInfinity, k: &TwistedComplex) -> Result<(), PretrError> {
    for &(_, x) in &k.components {
        if x >= c.num_objects() {
            return Err(PretrError::Object(x));
        }
    }
    Ok(())
}

pub fn validate_twisted(c: &dyn AInfinity, k: &TwistedComplex) -> Result<McReport, PretrError> {
    if !c.is_dg() {
        return Err(PretrError::NotDg);
    }
    check_components(c, k)?;
    for (&(a, b), v) in &k.q {
        if a >= k.len() || b >= k.len() {
            return Err(PretrError::Component(a.max(b)));
        }
        let h = c.hom(k.object(a), k.object(b));
        if v.len() != h.dim() {
            return Err(PretrError::Core(dgn_core::CoreError::DimensionMismatch { expected: h.dim(), got: v.len() }));
        }
        let expected = k.position(a) - k.position(b) + 1;
        if vector::is_zero(v) {
            continue;
        }
        match h.homogeneous_degree(v) {
            Some(d) if d == expected => {}
            got => return Err(PretrError::Degree { from: a, to: b, expected, got }),
        }
    }
    let mut mc = tw_m1(c, k, k, &k.q);
    for (key, v) in tw_compose(c, k, k, k, &k.q, &k.q, 1) {
        add_into(&mut mc, key, &Scalar::one(), &v);
    }
    let defects = prune(&mc).into_iter().collect();
    Ok(McReport { pairs_checked: k.len() * k.len(), defects })
}

/// `K[n]`: the component at position `i` moves to `i − n`; `q` is unchanged.
pub fn shift_tw(k: &TwistedComplex, n: i32) -> TwistedComplex {
    TwistedComplex { components: k.components.iter().map(|&(p, x)| (p - n, x)).collect(), q: k.q.clone() }
}

/// `Cone(f) = (K_{i+1} ⊕ K′_i, [[(−1)^{i−j} q_{i+1,j+1}, f], [0, q′]])`.
///
/// The components of `K` come first, moved down one position, then those of `K′`.
pub fn cone_tw(
    c: &dyn AInfinity,
    k: &TwistedComplex,
    kp: &TwistedComplex,
    f: &TwElement,
) -> Result<TwistedComplex, PretrError> {
    let hom = TwHom::new(c, k, kp)?;
    hom.from_blocks(0, f)?;
    if !tw_is_zero(&tw_differential(c, k, kp, f, 0)) {
        return Err(PretrError::NotClosed);
    }
    let n = k.len();
    let mut components: Vec<(i32, usize)> = k.components.iter().map(|&(p, x)| (p - 1, x)).collect();
    components.extend(kp.components.iter().cloned());
    let mut q = TwElement::new();
    for (&(a, b), v) in &k.q {
        let sign = Scalar::sign((k.position(a) - k.position(b)) as i64);
        q.insert((a, b), vector::scale(&sign, v));
    }
    for (&(a, b), v) in f {
        q.insert((a, n + b), v.clone());
    }
    for (&(a, b), v) in &kp.q {
        q.insert((n + a, n + b), v.clone());
    }
    Ok(TwistedComplex { components, q: prune(&q) })
}

/// The hom complex of twisted complexes, with its coordinate layout.
///
/// Degree `k` is the sum over component pairs `(a, b)` of
/// `Hom^{k − pos_b + pos_a}(K_a, K′_b)`, pairs in lexicographic order and
/// each block in the order of the hom space's basis.
pub struct TwHom<'a> {
    c: &'a dyn AInfinity,
    pub src: TwistedComplex,
    pub tgt: TwistedComplex,
    layout: BTreeMap<i32, Vec<(usize, usize, Vec<usize>)>>,
}

impl<'a> TwHom<'a> {
    pub fn new(c: &'a dyn AInfinity, src: &TwistedComplex, tgt: &TwistedComplex) -> Result<Self, PretrError> {
        if !c.is_dg() {
            return Err(PretrError::NotDg);
        }
        check_components(c, src)?;
        check_components(c, tgt)?;
        let mut layout: BTreeMap<i32, Vec<(usize, usize, Vec<usize>)>> = BTreeMap::new();
        for (a, &(pa, x)) in src.components.iter().enumerate() {
            for (b, &(pb, y)) in tgt.components.iter().enumerate() {
                let h = c.hom(x, y);
                for l in h.profile().into_keys() {
                    layout.entry(l + pb - pa).or_default().push((a, b, h.basis_in_degree(l)));
                }
            }
        }
        Ok(TwHom { c, src: src.clone(), tgt: tgt.clone(), layout })
    }

    pub fn dim(&self, k: i32) -> usize {
        self.layout.get(&k).map_or(0, |blocks| blocks.iter().map(|b| b.2.len()).sum())
    }

    /// The smallest and largest degree with a nonzero slice.
    pub fn window(&self) -> Option<(i32, i32)> {
        Some((*self.layout.keys().next()?, *self.layout.keys().last()?))
    }

    /// Coordinate range of the block `(a, b)` inside degree `k`.
    pub fn block_range(&self, k: i32, a: usize, b: usize) -> Option<std::ops::Range<usize>> {
        let mut at = 0;
        for (x, y, idx) in self.layout.get(&k)? {
            if (*x, *y) == (a, b) {
                return Some(at..at + idx.len());
            }
            at += idx.len();
        }
        None
    }

    pub fn to_blocks(&self, k: i32, v: &[Scalar]) -> TwElement {
        let mut out = TwElement::new();
        let mut at = 0;
        for (a, b, idx) in self.layout.get(&k).into_iter().flatten() {
            let h = self.c.hom(self.src.object(*a), self.tgt.object(*b));
            let mut w = vector::zeros(h.dim());
            for (&i, x) in idx.iter().zip(&v[at..at + idx.len()]) {
                w[i] = x.clone();
            }
            at += idx.len();
            out.insert((*a, *b), w);
        }
        prune(&out)
    }

    /// Degree-`k` coordinates; fails when an entry leaves degree `k`.
    pub fn from_blocks(&self, k: i32, e: &TwElement) -> Result<Vector, PretrError> {
        let mut out = vector::zeros(self.dim(k));
        let mut used = 0;
        let mut at = 0;
        for (a, b, idx) in self.layout.get(&k).into_iter().flatten() {
            if let Some(w) = e.get(&(*a, *b)) {
                for (j, &i) in idx.iter().enumerate() {
                    out[at + j] = w[i].clone();
                }
                used += idx.iter().filter(|&&i| !w[i].is_zero()).count();
            }
            at += idx.len();
        }
        let total: usize = e.values().map(|w| w.iter().filter(|x| !x.is_zero()).count()).sum();
        if used != total {
            return Err(PretrError::NotHomogeneous(k));
        }
        Ok(out)
    }

    pub fn differential(&self, k: i32, f: &TwElement) -> TwElement {
        tw_differential(self.c, &self.src, &self.tgt, f, k)
    }

    /// The matrix of `D` leaving degree `k`.
    pub fn d_matrix(&self, k: i32) -> Result<Matrix, PretrError> {
        let n = self.dim(k);
        let mut cols = Vec::with_capacity(n);
        for i in 0..n {
            let image = self.differential(k, &self.to_blocks(k, &vector::unit(n, i)));
            cols.push(self.from_blocks(k + 1, &image)?);
        }
        Ok(Matrix::from_columns(&cols, self.dim(k + 1)))
    }

    /// The cochain complex, checked for `D² = 0`.
    pub fn complex(&self) -> Result<ChainComplex, PretrError> {
        let (lo, hi) = match self.window() {
            Some(w) => w,
            None => return Ok(ChainComplex::zero(Grading::Cochain)),
        };
        let mut dims = Vec::new();
        let mut d = Vec::new();
        for k in lo..=hi {
            dims.push(self.dim(k));
            let m = self.d_matrix(k)?;
            d.push(if k == hi { Matrix::zeros(0, m.cols()) } else { m });
        }
        Ok(ChainComplex::new(Grading::Cochain, lo, dims, d)?)
    }

    /// A random closed element of degree `k` with small integer coefficients.
    pub fn random_closed(&self, k: i32, rng: &mut impl Rng) -> Result<TwElement, PretrError> {
        let z = self.d_matrix(k)?.kernel();
        Ok(self.to_blocks(k, &random::combination(Field::Rational, &z, rng)))
    }
}

/// `tw_hom(K, K′)` as a cochain complex.
pub fn tw_hom(c: &dyn AInfinity, k: &TwistedComplex, kp: &TwistedComplex) -> Result<ChainComplex, PretrError> {
    TwHom::new(c, k, kp)?.complex()
}

/// A random valid twisted complex built from `ε(x)` by `steps` cones on
/// random closed degree-0 maps to or from shifted objects.
pub fn random_twisted(c: &dyn AInfinity, steps: usize, rng: &mut impl Rng) -> Result<TwistedComplex, PretrError> {
    let n = c.num_objects();
    let mut k = TwistedComplex::embed(rng.gen_range(0..n));
    for _ in 0..steps {
        let other = shift_tw(&TwistedComplex::embed(rng.gen_range(0..n)), rng.gen_range(-1..=1));
        k = if rng.gen_bool(0.5) {
            let f = TwHom::new(c, &k, &other)?.random_closed(0, rng)?;
            cone_tw(c, &k, &other, &f)?
        } else {
            let f = TwHom::new(c, &other, &k)?.random_closed(0, rng)?;
            cone_tw(c, &other, &k, &f)?
        };
    }
    Ok(k)
}
