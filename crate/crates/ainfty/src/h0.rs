//! The homotopy category `H⁰`: objects, `H⁰` of every hom and the induced composition.

use std::collections::BTreeMap;

use dgn_core::{vector, ChainComplex, Grading, HomologyBasis, Matrix, Scalar, Vector};
use rand::Rng;

use crate::{AInfError, AInfinity};

/// `H⁰Hom(x, y)` with a cycle basis, embedded back into the full hom space.
#[derive(Clone, Debug)]
pub struct H0Hom {
    pub dim: usize,
    /// degree-0 coordinate indices inside the full hom space
    coords: Vec<usize>,
    full_dim: usize,
    basis: HomologyBasis,
}

impl H0Hom {
    /// Representative of the `i`-th class as a full hom vector.
    pub fn rep(&self, i: usize) -> Vector {
        self.embed(&self.basis.reps.col(i))
    }

    fn embed(&self, slice: &[Scalar]) -> Vector {
        let mut v = vector::zeros(self.full_dim);
        for (k, &c) in self.coords.iter().enumerate() {
            v[c] = slice[k].clone();
        }
        v
    }

    /// Class coordinates of a degree-0 cycle.
    pub fn classify(&self, v: &[Scalar]) -> Result<Vector, AInfError> {
        let slice: Vector = self.coords.iter().map(|&c| v[c].clone()).collect();
        Ok(self.basis.classify(&slice)?)
    }
}

#[derive(Clone, Debug)]
pub struct H0Category {
    pub objects: Vec<String>,
    pub homs: BTreeMap<(usize, usize), H0Hom>,
    /// `(x, y, z)` ↦ `[a][b]` class of `m_2(a, b)` for `a ∈ H⁰(y,z)`, `b ∈ H⁰(x,y)`
    pub composition: BTreeMap<(usize, usize, usize), Vec<Vec<Vector>>>,
}

impl H0Category {
    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.homs.get(&(x, y)).map_or(0, |h| h.dim)
    }
}

/// The `m_1` matrix from degree `k` to `k+1` of `Hom(x, y)`.
fn m1_matrix(c: &dyn AInfinity, x: usize, y: usize, k: i32) -> Matrix {
    let h = c.hom(x, y);
    let src = h.basis_in_degree(k);
    let tgt = h.basis_in_degree(k + 1);
    let mut m = Matrix::zeros(tgt.len(), src.len());
    for (j, &b) in src.iter().enumerate() {
        let img = c.m(&[x, y], &[&vector::unit(h.dim(), b)]);
        for (i, &t) in tgt.iter().enumerate() {
            m.set(i, j, img[t].clone());
        }
    }
    m
}

/// `Hom(x, y)` as a cochain complex on the degrees present.
pub fn hom_cochain(c: &dyn AInfinity, x: usize, y: usize) -> ChainComplex {
    let prof = c.hom(x, y).profile();
    let (Some(&lo), Some(&hi)) = (prof.keys().next(), prof.keys().last()) else {
        return ChainComplex::zero(Grading::Cochain);
    };
    let dims = (lo..=hi).map(|k| prof.get(&k).copied().unwrap_or(0)).collect();
    let d = (lo..=hi)
        .map(|k| if k < hi { m1_matrix(c, x, y, k) } else { Matrix::zeros(0, prof[&hi]) })
        .collect();
    ChainComplex::new_unchecked(Grading::Cochain, lo, dims, d).expect("shapes match the profile")
}

pub fn h0_category(c: &dyn AInfinity) -> Result<H0Category, AInfError> {
    let k = c.num_objects();
    let mut homs = BTreeMap::new();
    for x in 0..k {
        for y in 0..k {
            let h = c.hom(x, y);
            let coords = h.basis_in_degree(0);
            let n0 = coords.len();
            let d_in = m1_matrix(c, x, y, -1);
            let d_out = m1_matrix(c, x, y, 0);
            let cx = ChainComplex::new(
                Grading::Cochain,
                -1,
                vec![d_in.cols(), n0, d_out.rows()],
                vec![d_in, d_out, Matrix::zeros(0, h.basis_in_degree(1).len())],
            )
            .map_err(|e| AInfError::Invalid(format!("m_1 does not square to zero on Hom({x},{y}): {e}")))?;
            let basis = cx.homology_basis(0);
            homs.insert((x, y), H0Hom { dim: basis.dim(), coords, full_dim: h.dim(), basis });
        }
    }
    let mut composition = BTreeMap::new();
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                let (hb, ha, hc) = (&homs[&(x, y)], &homs[&(y, z)], &homs[&(x, z)]);
                let mut table = Vec::with_capacity(ha.dim);
                for i in 0..ha.dim {
                    let a = ha.rep(i);
                    let mut row = Vec::with_capacity(hb.dim);
                    for j in 0..hb.dim {
                        let v = c.m(&[x, y, z], &[&a, &hb.rep(j)]);
                        row.push(hc.classify(&v)?);
                    }
                    table.push(row);
                }
                composition.insert((x, y, z), table);
            }
        }
    }
    let objects = (0..k).map(|x| c.object_label(x)).collect();
    Ok(H0Category { objects, homs, composition })
}

/// Moves each representative by a random `m_1`-boundary and checks that
/// composed classes do not change.
pub fn check_well_defined(c: &dyn AInfinity, h: &H0Category, rng: &mut impl Rng, trials: usize) -> Result<bool, AInfError> {
    let k = c.num_objects();
    for _ in 0..trials {
        let (x, y, z) = (rng.gen_range(0..k), rng.gen_range(0..k), rng.gen_range(0..k));
        let (hb, ha, hc) = (&h.homs[&(x, y)], &h.homs[&(y, z)], &h.homs[&(x, z)]);
        if ha.dim == 0 || hb.dim == 0 {
            continue;
        }
        let (i, j) = (rng.gen_range(0..ha.dim), rng.gen_range(0..hb.dim));
        let shift = |x: usize, y: usize, rng: &mut dyn rand::RngCore| -> Vector {
            let sp = c.hom(x, y);
            let mut u = vector::zeros(sp.dim());
            for b in sp.basis_in_degree(-1) {
                u[b] = Scalar::from_int(rand::Rng::gen_range(rng, -2..=2));
            }
            c.m(&[x, y], &[&u])
        };
        let a = vector::add(&ha.rep(i), &shift(y, z, rng));
        let b = vector::add(&hb.rep(j), &shift(x, y, rng));
        let v = c.m(&[x, y, z], &[&a, &b]);
        if hc.classify(&v)? != h.composition[&(x, y, z)][i][j] {
            return Ok(false);
        }
    }
    Ok(true)
}
