//! Mapping spaces `Map(x, y) = DK(τ≥0(Hom(x, y)^op))` of a dg-category and
//! their composition.
//!
//! Level `p > 0` of `τ≥0(Hom^op)` is `Hom^{−p}` in the coordinates of the
//! degree `−p` basis vectors of `Hom(x, y)`; level 0 is `Z⁰` in the
//! coordinates of a fixed kernel basis.

use std::collections::BTreeMap;

use dgn_ainfty::h0::hom_cochain;
use dgn_ainfty::AInfinity;
use dgn_core::complex::truncate_nonneg_with_inclusion;
use dgn_core::{vector, ChainComplex, Matrix, Scalar, Vector};

use crate::awez::{aw, AwEz, SignMode};
use crate::decompose::Decomposer;
use crate::dk::{dk, DkSpace};
use crate::simplicial::{Normalized, SimplicialVS};
use crate::DkError;

#[derive(Clone, Debug)]
pub struct MappingSpace {
    pub x: usize,
    pub y: usize,
    /// `τ≥0(Hom(x, y)^op)`.
    pub truncated: ChainComplex,
    /// Basis of `Z⁰(x, y)` in degree-0 coordinates, as columns.
    pub cycles: Matrix,
    pub dk: DkSpace,
    hom_dim: usize,
    coords: BTreeMap<i32, Vec<usize>>,
}

pub fn mapping_space(c: &dyn AInfinity, x: usize, y: usize, level_cap: usize) -> Result<MappingSpace, DkError> {
    if !c.is_dg() {
        return Err(DkError::NotDg);
    }
    let h = c.hom(x, y);
    if let Some(&degree) = h.profile().keys().next() {
        if degree < -(level_cap as i32) {
            return Err(DkError::WindowOverflow { x, y, degree, cap: level_cap });
        }
    }
    let (truncated, cycles) = truncate_nonneg_with_inclusion(&hom_cochain(c, x, y).op());
    let coords = h.profile().keys().map(|&k| (k, h.basis_in_degree(k))).collect();
    let dk = dk(&truncated, level_cap)?;
    Ok(MappingSpace { x, y, truncated, cycles, dk, hom_dim: h.dim(), coords })
}

impl MappingSpace {
    pub fn space(&self) -> &SimplicialVS {
        &self.dk.space
    }

    pub fn level_cap(&self) -> usize {
        self.dk.level_cap()
    }

    /// Level-`p` coordinates of `τ≥0(Hom^op)` to a vector of `Hom(x, y)`.
    pub fn to_hom(&self, p: usize, a: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.hom_dim);
        let Some(idx) = self.coords.get(&-(p as i32)) else {
            return out;
        };
        let local = if p == 0 { self.cycles.mul_vec(a).expect("Z⁰ coordinates") } else { a.to_vec() };
        for (&i, v) in idx.iter().zip(local) {
            out[i] = v;
        }
        out
    }

    /// The inverse of [`MappingSpace::to_hom`]; `None` when `h` is not a
    /// homogeneous element of degree `−p` (closed when `p = 0`).
    pub fn from_hom(&self, p: usize, h: &[Scalar]) -> Option<Vector> {
        let idx = self.coords.get(&-(p as i32));
        let mut local = Vec::new();
        for (i, v) in h.iter().enumerate() {
            let inside = idx.is_some_and(|idx| idx.contains(&i));
            if inside {
                local.push(v.clone());
            } else if !v.is_zero() {
                return None;
            }
        }
        if idx.is_none() {
            return Some(Vec::new());
        }
        if p == 0 {
            self.cycles.solve(&local)
        } else {
            Some(local)
        }
    }

    /// The level-`n` simplex of `Map(x, x)` degenerated from `1_x`.
    pub fn unit_simplex(&self, c: &dyn AInfinity, n: usize) -> Result<Vector, DkError> {
        let unit = c.unit(self.x).ok_or(DkError::NoUnit(self.x))?;
        let a = self.from_hom(0, &unit).ok_or(DkError::NoUnit(self.x))?;
        Ok(self.dk.embed(n, &vec![0; n + 1], &a))
    }
}

/// Composition `Map(x, y)_n × Map(y, z)_n → Map(x, z)_n` with the product
/// data cached up to `max_level`.
pub struct Pairing<'a> {
    c: &'a dyn AInfinity,
    pub first: &'a MappingSpace,
    pub second: &'a MappingSpace,
    pub target: &'a MappingSpace,
    nx: Normalized,
    ny: Normalized,
    xs: SimplicialVS,
    ys: SimplicialVS,
    decomposers: Vec<Decomposer>,
}

impl<'a> Pairing<'a> {
    pub fn new(
        c: &'a dyn AInfinity,
        first: &'a MappingSpace,
        second: &'a MappingSpace,
        target: &'a MappingSpace,
        max_level: usize,
    ) -> Result<Self, DkError> {
        let cap = max_level.min(first.level_cap()).min(second.level_cap()).min(target.level_cap());
        if cap < max_level {
            return Err(DkError::OutOfCap { level: max_level, cap });
        }
        let xs = first.space().truncated(cap);
        let ys = second.space().truncated(cap);
        let product = xs.product(&ys);
        let norm = Normalized::new(&product)?;
        let decomposers = (0..=cap).map(|n| Decomposer::new(&product, &norm, n)).collect::<Result<Vec<_>, _>>()?;
        let trunc = |m: &MappingSpace| {
            let mut nm = m.dk.canonical_normalized();
            nm.inclusions.truncate(cap + 1);
            nm.projections.truncate(cap + 1);
            nm
        };
        Ok(Pairing { c, first, second, target, nx: trunc(first), ny: trunc(second), xs, ys, decomposers })
    }

    /// `(−1)^{pq} m₂(a, b)` for `b ∈ Hom^{−p}(x, y)`, `a ∈ Hom^{−q}(y, z)`,
    /// extended to `(τ≥0 Hom^op)(x,y) ⊗ (τ≥0 Hom^op)(y,z)` in tensor coordinates.
    fn multiply(&self, level: usize, t: &[Scalar]) -> Result<Vector, DkError> {
        let (a, b) = (&self.first.truncated, &self.second.truncated);
        let objs = [self.first.x, self.first.y, self.second.y];
        let mut out = vector::zeros(self.target.hom_dim);
        for p in 0..=level {
            let q = level - p;
            let (dp, dq) = (a.dim(p as i32), b.dim(q as i32));
            let at = a.tensor_offset(b, level as i32, p as i32);
            for i in 0..dp {
                for k in 0..dq {
                    let coeff = &t[at + i * dq + k];
                    if coeff.is_zero() {
                        continue;
                    }
                    let f = self.first.to_hom(p, &vector::unit(dp, i));
                    let g = self.second.to_hom(q, &vector::unit(dq, k));
                    let m = self.c.m(&objs, &[&g, &f]);
                    vector::axpy(&mut out, &(coeff * &Scalar::sign((p * q) as i64)), &m);
                }
            }
        }
        self.target
            .from_hom(level, &out)
            .ok_or_else(|| DkError::Identity(format!("composite of level {level} left τ≥0(Hom^op)")))
    }

    /// `b ∘ a` for `b ∈ Map(x, y)_n`, `a ∈ Map(y, z)_n`: decompose `(b, a)`
    /// in the product, apply Alexander-Whitney and `m₂` to each normalized
    /// piece, and put the result back at the same surjection.
    pub fn compose(&self, n: usize, b: &[Scalar], a: &[Scalar]) -> Result<Vector, DkError> {
        if n >= self.decomposers.len() {
            return Err(DkError::OutOfCap { level: n, cap: self.decomposers.len() - 1 });
        }
        for (v, dim) in [(b, self.xs.dim(n)), (a, self.ys.dim(n))] {
            if v.len() != dim {
                return Err(DkError::Length { expected: dim, got: v.len() });
            }
        }
        let pair: Vector = b.iter().flat_map(|x| a.iter().map(move |y| x * y)).collect();
        let ctx = AwEz::new(&self.xs, &self.ys, &self.nx, &self.ny);
        let mut out = vector::zeros(self.target.dk.space.dim(n));
        for (eta, piece) in self.decomposers[n].decompose(&pair)? {
            if vector::is_zero(&piece) {
                continue;
            }
            let p = eta[n];
            let t = aw(&ctx, p, &piece, SignMode::Classical)?;
            let value = self.multiply(p, &t)?;
            vector::axpy(&mut out, &Scalar::one(), &self.target.dk.embed(n, &eta, &value));
        }
        Ok(out)
    }
}

/// One-off composition; build a [`Pairing`] to compose many simplices.
pub fn compose_simplices(
    c: &dyn AInfinity,
    first: &MappingSpace,
    second: &MappingSpace,
    target: &MappingSpace,
    n: usize,
    b: &[Scalar],
    a: &[Scalar],
) -> Result<Vector, DkError> {
    Pairing::new(c, first, second, target, n)?.compose(n, b, a)
}
