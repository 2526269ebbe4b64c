//! The chain-level checks behind stability: fiber and cofiber comparison
//! maps, the witnesses of the rotation argument, the zero object and the
//! long exact sequence of a cone.
//!
//! Everything is computed in twisted complexes over the chain dg-category,
//! with `Cone(f) = cone_tw(ε(x), ε(y), f)` having `X` at position −1 (index 0)
//! and `Y` at position 0 (index 1).

use std::collections::BTreeMap;

use dgn_ainfty::AInfinity;
use dgn_core::complex::truncate_nonneg_with_inclusion;
use dgn_core::{vector, ChainComplex, ChainMap, Grading, Matrix, Scalar, Vector};

use crate::chain::ChainDgCategory;
use crate::cone::check_closed;
use crate::path::{homotopy_pullback, Cospan};
use crate::twisted::{
    cone_tw, shift_tw, tw_compose, tw_differential, tw_is_zero, tw_sub, validate_twisted, TwElement, TwHom,
    TwistedComplex,
};
use crate::PretrError;

fn single(a: usize, b: usize, v: Vector) -> TwElement {
    TwElement::from([((a, b), v)])
}

fn unit(c: &ChainDgCategory, x: usize) -> Vector {
    c.hom_space(x, x).identity()
}

/// Matrix of a map between cohomology groups, in the representative bases
/// of `homology_basis`. `m` goes from level `ns` of `src` to level `nt` of `tgt`.
pub fn induced(src: &ChainComplex, ns: i32, tgt: &ChainComplex, nt: i32, m: &Matrix) -> Result<Matrix, PretrError> {
    let (hs, ht) = (src.homology_basis(ns), tgt.homology_basis(nt));
    let mut cols = Vec::new();
    for z in hs.reps.columns() {
        cols.push(ht.classify(&m.mul_vec(&z)?)?);
    }
    Ok(Matrix::from_columns(&cols, ht.dim()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiIsoReport {
    pub chain_map: bool,
    pub source_homology: BTreeMap<i32, usize>,
    pub target_homology: BTreeMap<i32, usize>,
    /// Rank of the induced map per level.
    pub ranks: BTreeMap<i32, usize>,
}

impl QuasiIsoReport {
    pub fn passed(&self) -> bool {
        self.chain_map
            && self.source_homology == self.target_homology
            && self.ranks.iter().all(|(n, r)| self.source_homology.get(n) == Some(r))
    }
}

pub fn quasi_iso_report(src: &ChainComplex, tgt: &ChainComplex, f: &ChainMap) -> Result<QuasiIsoReport, PretrError> {
    let chain_map = f.is_chain_map(src, tgt);
    let lo = src.lo.min(tgt.lo);
    let hi = src.hi().max(tgt.hi());
    let mut source_homology = BTreeMap::new();
    let mut target_homology = BTreeMap::new();
    let mut ranks = BTreeMap::new();
    for n in lo..=hi {
        source_homology.insert(n, src.homology_dim(n));
        target_homology.insert(n, tgt.homology_dim(n));
        let rank = if chain_map { induced(src, n, tgt, n, &f.at(src, tgt, n))?.rank() } else { 0 };
        ranks.insert(n, rank);
    }
    Ok(QuasiIsoReport { chain_map, source_homology, target_homology, ranks })
}

/// `τ≥0(tw_hom^op)` with the level-0 cycle basis.
struct Truncated<'a> {
    hom: TwHom<'a>,
    complex: ChainComplex,
    cycles: Matrix,
}

impl<'a> Truncated<'a> {
    fn new(c: &'a dyn AInfinity, k: &TwistedComplex, kp: &TwistedComplex) -> Result<Self, PretrError> {
        let hom = TwHom::new(c, k, kp)?;
        let (complex, cycles) = truncate_nonneg_with_inclusion(&hom.complex()?.op());
        Ok(Truncated { hom, complex, cycles })
    }

    /// The element for the `i`-th basis vector of level `n`.
    fn element(&self, n: i32, i: usize) -> TwElement {
        let dim = self.complex.dim(n);
        let raw = if n == 0 { self.cycles.col(i) } else { vector::unit(dim, i) };
        self.hom.to_blocks(-n, &raw)
    }

    /// Level-`n` coordinates of an element of degree `−n`.
    fn coords(&self, n: i32, e: &TwElement) -> Result<Vector, PretrError> {
        let raw = self.hom.from_blocks(-n, e)?;
        if n == 0 {
            return self.cycles.solve(&raw).ok_or(PretrError::NotClosed);
        }
        Ok(raw)
    }
}

/// One side of the comparison: `T → P(f₀₁) ×_{X₀} P(0)` given by
/// `t ↦ ((a(t), β(t), 0), (0, 0, 0))` with `f₀₁`, `a` and `β` built from
/// composition in twisted complexes.
struct Side<'a> {
    source: Truncated<'a>,
    leg: Truncated<'a>,
    base: Truncated<'a>,
}

impl<'a> Side<'a> {
    fn check(
        &self,
        f01: impl Fn(&TwElement, i32) -> TwElement,
        a: impl Fn(&TwElement, i32) -> TwElement,
        beta: impl Fn(&TwElement, i32) -> TwElement,
    ) -> Result<QuasiIsoReport, PretrError> {
        let (x1, x0) = (&self.leg.complex, &self.base.complex);
        let mut leg_map = ChainMap { maps: BTreeMap::new() };
        for n in 0..=x1.hi().max(0) {
            let cols = (0..x1.dim(n))
                .map(|i| self.base.coords(n, &f01(&self.leg.element(n, i), -n)))
                .collect::<Result<Vec<_>, _>>()?;
            leg_map.maps.insert(n, Matrix::from_columns(&cols, x0.dim(n)));
        }
        let cospan = Cospan {
            x1: x1.clone(),
            x0: x0.clone(),
            x2: ChainComplex::zero(Grading::Chain),
            f01: leg_map,
            f02: ChainMap { maps: BTreeMap::new() },
        };
        let pb = homotopy_pullback(&cospan)?;
        let t = &self.source.complex;
        let mut phi = ChainMap { maps: BTreeMap::new() };
        for n in 0..=t.hi().max(0) {
            let mut cols = Vec::new();
            for i in 0..t.dim(n) {
                let e = self.source.element(n, i);
                let av = self.leg.coords(n, &a(&e, -n))?;
                let bv = self.base.coords(n + 1, &beta(&e, -n))?;
                let zero_c = vector::zeros(x0.dim(n));
                let u = pb.first.coords(n as usize, &av, &bv, &zero_c).ok_or(PretrError::NotClosed)?;
                let v = pb
                    .second
                    .coords(n as usize, &[], &vector::zeros(x0.dim(n + 1)), &zero_c)
                    .ok_or(PretrError::NotClosed)?;
                cols.push(pb.coords(n as usize, &u, &v).ok_or(PretrError::NotClosed)?);
            }
            phi.maps.insert(n, Matrix::from_columns(&cols, pb.complex.dim(n)));
        }
        quasi_iso_report(t, &pb.complex, &phi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberCofiberReport {
    /// `τ≥0 Hom(Cone(f), Z)^op → τ≥0 Hom(Y,Z)^op ×^h_{τ≥0 Hom(X,Z)^op} 0`, induced by `j` and `h`.
    pub cofiber: QuasiIsoReport,
    /// `τ≥0 Hom(Z, Cone(f)[−1])^op → τ≥0 Hom(Z,X)^op ×^h_{τ≥0 Hom(Z,Y)^op} 0`, induced by `i`.
    pub fiber: QuasiIsoReport,
}

impl FiberCofiberReport {
    pub fn passed(&self) -> bool {
        self.cofiber.passed() && self.fiber.passed()
    }
}

pub fn fiber_cofiber_check(
    c: &ChainDgCategory,
    x: usize,
    y: usize,
    f: &[Scalar],
    z: usize,
) -> Result<FiberCofiberReport, PretrError> {
    check_closed(c, x, y, f)?;
    let (ex, ey, ez) = (TwistedComplex::embed(x), TwistedComplex::embed(y), TwistedComplex::embed(z));
    let fe = single(0, 0, f.to_vec());
    let cone = cone_tw(c, &ex, &ey, &fe)?;

    // j = (Id_Y, 0) and h = (0, Id_X) with D(h) = j·f
    let j = single(0, 1, unit(c, y));
    let h = single(0, 0, unit(c, x));
    let cof = Side {
        source: Truncated::new(c, &cone, &ez)?,
        leg: Truncated::new(c, &ey, &ez)?,
        base: Truncated::new(c, &ex, &ez)?,
    };
    let cofiber = cof.check(
        |a, _| tw_compose(c, &ex, &ey, &ez, a, &fe, 0),
        |t, _| tw_compose(c, &ey, &cone, &ez, t, &j, 0),
        |t, k| {
            // β(t) = (−1)^{k+1} t·h for t of degree k
            let th = tw_compose(c, &ex, &cone, &ez, t, &h, -1);
            th.into_iter().map(|(key, v)| (key, vector::scale(&Scalar::sign((k + 1) as i64), &v))).collect()
        },
    )?;

    // i = (Id_X, 0) on Cone(f)[−1] and the homotopy Id_Y : Y@1 → Y@0 with D = f·i
    let fib_cone = shift_tw(&cone, -1);
    let i = single(0, 0, unit(c, x));
    let hf = single(1, 0, unit(c, y));
    let fib = Side {
        source: Truncated::new(c, &ez, &fib_cone)?,
        leg: Truncated::new(c, &ez, &ex)?,
        base: Truncated::new(c, &ez, &ey)?,
    };
    let fiber = fib.check(
        |a, k| tw_compose(c, &ez, &ex, &ey, &fe, a, k),
        |t, k| tw_compose(c, &ez, &fib_cone, &ex, &i, t, k),
        |t, k| {
            let ht = tw_compose(c, &ez, &fib_cone, &ey, &hf, t, k);
            ht.into_iter().map(|(key, v)| (key, vector::neg(&v))).collect()
        },
    )?;
    Ok(FiberCofiberReport { cofiber, fiber })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub cone_valid: bool,
    /// `D(j) = 0` for `j = (Id_Y, 0)`.
    pub j_closed: bool,
    /// `D(h) = j∘f` for `h = (0, Id_X)`.
    pub h_bounds_jf: bool,
    /// `Cone(j)[−1]` satisfies Maurer-Cartan.
    pub rotation_valid: bool,
    /// `g = (0, (−f) ⊕ i_X)` and `h = (0, π_X)` are closed.
    pub g_h_closed: bool,
    /// `h∘g = Id_X`.
    pub hg_identity: bool,
    /// `D(α) = g∘h − Id` for `α = −i_Y : Y@1 → Y@0`.
    pub alpha_homotopy: bool,
    /// `Hom(X, 0)` and `Hom(0, X)` are acyclic for every object.
    pub zero_law: bool,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.cone_valid
            && self.j_closed
            && self.h_bounds_jf
            && self.rotation_valid
            && self.g_h_closed
            && self.hg_identity
            && self.alpha_homotopy
            && self.zero_law
    }
}

pub fn stability_witnesses(c: &ChainDgCategory, x: usize, y: usize, f: &[Scalar]) -> Result<WitnessReport, PretrError> {
    check_closed(c, x, y, f)?;
    let zero = c.zero_object().ok_or(PretrError::MissingZero)?;
    let (ex, ey) = (TwistedComplex::embed(x), TwistedComplex::embed(y));
    let fe = single(0, 0, f.to_vec());
    let cone = cone_tw(c, &ex, &ey, &fe)?;
    let cone_valid = validate_twisted(c, &cone)?.passed();

    let j = single(0, 1, unit(c, y));
    let j_closed = tw_is_zero(&tw_differential(c, &ey, &cone, &j, 0));
    let h = single(0, 0, unit(c, x));
    let jf = tw_compose(c, &ex, &ey, &cone, &j, &fe, 0);
    let h_bounds_jf = tw_sub(&tw_differential(c, &ex, &cone, &h, -1), &jf).is_empty();

    // Cone(j)[−1] = (Y ⊕ X)_0 → (Y)_1 with components Y@0, X@0, Y@1
    let rot = shift_tw(&cone_tw(c, &ey, &cone, &j)?, -1);
    let rotation_valid = validate_twisted(c, &rot)?.passed();
    let mut g = single(0, 0, vector::neg(f));
    g.insert((0, 1), unit(c, x));
    let hh = single(1, 0, unit(c, x));
    let g_h_closed =
        tw_is_zero(&tw_differential(c, &ex, &rot, &g, 0)) && tw_is_zero(&tw_differential(c, &rot, &ex, &hh, 0));
    let hg = tw_compose(c, &ex, &rot, &ex, &hh, &g, 0);
    let hg_identity = tw_sub(&hg, &ex.identity(c)?).is_empty();
    let alpha = single(2, 0, vector::neg(&unit(c, y)));
    let gh = tw_compose(c, &rot, &ex, &rot, &g, &hh, 0);
    let target = tw_sub(&gh, &rot.identity(c)?);
    let alpha_homotopy = tw_sub(&tw_differential(c, &rot, &rot, &alpha, -1), &target).is_empty();

    let ez = TwistedComplex::embed(zero);
    let mut zero_law = true;
    for w in 0..c.num_objects() {
        let ew = TwistedComplex::embed(w);
        for (s, t) in [(&ew, &ez), (&ez, &ew)] {
            zero_law &= TwHom::new(c, s, t)?.complex()?.is_acyclic();
        }
    }
    Ok(WitnessReport {
        cone_valid,
        j_closed,
        h_bounds_jf,
        rotation_valid,
        g_h_closed,
        hg_identity,
        alpha_homotopy,
        zero_law,
    })
}

/// Exactness data at one term of the long exact sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesNode {
    /// `"Cone"`, `"Y"` or `"X"`: the first argument of `Hom(−, Z)`.
    pub term: &'static str,
    pub k: i32,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub composite_zero: bool,
}

impl LesNode {
    /// Image of the incoming map equals the kernel of the outgoing one.
    pub fn exact(&self) -> bool {
        self.composite_zero && self.rank_in + self.rank_out == self.dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesReport {
    pub nodes: Vec<LesNode>,
}

impl LesReport {
    pub fn passed(&self) -> bool {
        self.nodes.iter().all(LesNode::exact)
    }
}

/// `H^k Hom(Cone f, Z) →^{−∘j} H^k Hom(Y, Z) →^{−∘f} H^k Hom(X, Z) →^{−∘p} H^{k+1} Hom(Cone f, Z)`
/// with `p : Cone(f) → X[1]` the projection.
pub fn les_check(c: &ChainDgCategory, x: usize, y: usize, f: &[Scalar], z: usize) -> Result<LesReport, PretrError> {
    check_closed(c, x, y, f)?;
    let (ex, ey, ez) = (TwistedComplex::embed(x), TwistedComplex::embed(y), TwistedComplex::embed(z));
    let ex1 = shift_tw(&ex, 1);
    let fe = single(0, 0, f.to_vec());
    let cone = cone_tw(c, &ex, &ey, &fe)?;
    let j = single(0, 1, unit(c, y));
    let p = single(0, 0, unit(c, x));
    let (hc, hy, hx) = (TwHom::new(c, &cone, &ez)?, TwHom::new(c, &ey, &ez)?, TwHom::new(c, &ex, &ez)?);
    let hx1 = TwHom::new(c, &ex1, &ez)?;
    let (cc, cy, cx) = (hc.complex()?, hy.complex()?, hx.complex()?);

    let matrix = |src: &TwHom, ks: i32, tgt: &TwHom, kt: i32, map: &dyn Fn(&TwElement) -> TwElement| {
        let n = src.dim(ks);
        let cols = (0..n)
            .map(|i| tgt.from_blocks(kt, &map(&src.to_blocks(ks, &vector::unit(n, i)))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok::<Matrix, PretrError>(Matrix::from_columns(&cols, tgt.dim(kt)))
    };
    let alpha = |k: i32| matrix(&hc, k, &hy, k, &|t| tw_compose(c, &ey, &cone, &ez, t, &j, 0));
    let beta = |k: i32| matrix(&hy, k, &hx, k, &|a| tw_compose(c, &ex, &ey, &ez, a, &fe, 0));
    let delta = |k: i32| matrix(&hx, k, &hc, k + 1, &|e| tw_compose(c, &cone, &ex1, &ez, e, &p, 0));
    // the same vector of Hom^k(X, Z) is an element of degree k+1 of tw_hom(X[1], Z)
    debug_assert!((-3..3).all(|k| hx.dim(k) == hx1.dim(k + 1)));

    let lo = [&cc, &cy, &cx].iter().map(|c| c.lo).min().unwrap_or(0) - 1;
    let hi = [&cc, &cy, &cx].iter().map(|c| c.hi()).max().unwrap_or(0) + 1;
    let mut nodes = Vec::new();
    for k in lo..=hi {
        let maps = [
            ("Cone", &cc, (&cx, k - 1, delta(k - 1)?), (&cy, k, alpha(k)?)),
            ("Y", &cy, (&cc, k, alpha(k)?), (&cx, k, beta(k)?)),
            ("X", &cx, (&cy, k, beta(k)?), (&cc, k + 1, delta(k)?)),
        ];
        for (term, here, (src, ks, m_in), (tgt, kt, m_out)) in maps {
            let a = induced(src, ks, here, k, &m_in)?;
            let b = induced(here, k, tgt, kt, &m_out)?;
            let composite_zero = b.mul(&a)?.is_zero();
            nodes.push(LesNode {
                term,
                k,
                dim: here.homology_dim(k),
                rank_in: a.rank(),
                rank_out: b.rank(),
                composite_zero,
            });
        }
    }
    Ok(LesReport { nodes })
}
