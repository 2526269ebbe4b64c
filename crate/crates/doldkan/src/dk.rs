//! The Dold-Kan functor `DK(A)_n = ⊕_{η : [n] ↠ [p]} A_p[η]`.
//!
//! For `θ : [m] → [n]` the component `A_p[η]` of `θ*` is read off the
//! factorization `η∘θ = ρ∘ε` with `ε : [m] ↠ [q]`: it is the identity into
//! `A_p[ε]` when `ρ = id`, `(−1)^p ∂_p` into `A_{p−1}[ε]` when `ρ` is the
//! coface missing `p`, and zero otherwise.

use std::collections::BTreeMap;

use dgn_core::{vector, ChainComplex, Grading, Matrix, Scalar, Vector};

use crate::simplicial::{Normalized, SimplicialVS};
use crate::surj::{all_surjections, compose, epi_mono, is_identity, Surjection};
use crate::DkError;

#[derive(Clone, Debug)]
pub struct DkSpace {
    /// `A`, restricted to levels `0..=level_cap`.
    pub complex: ChainComplex,
    pub space: SimplicialVS,
    offsets: Vec<BTreeMap<Surjection, usize>>,
}

fn restrict(a: &ChainComplex, cap: usize) -> Result<ChainComplex, DkError> {
    if a.grading != Grading::Chain {
        return Err(DkError::NotNonNegative);
    }
    if a.levels().any(|n| n < 0 && a.dim(n) > 0) {
        return Err(DkError::NotNonNegative);
    }
    let dims: Vec<usize> = (0..=cap as i32).map(|n| a.dim(n)).collect();
    let d = (0..=cap as i32).map(|n| if n == 0 { Matrix::zeros(0, a.dim(0)) } else { a.d_out(n) }).collect();
    Ok(ChainComplex::new(Grading::Chain, 0, dims, d)?)
}

/// `DK(A)` up to `level_cap`. `A` must be a chain complex without negative levels.
pub fn dk(a: &ChainComplex, level_cap: usize) -> Result<DkSpace, DkError> {
    let complex = restrict(a, level_cap)?;
    let mut offsets = Vec::new();
    let mut dims = Vec::new();
    for n in 0..=level_cap {
        let mut map = BTreeMap::new();
        let mut at = 0;
        for eta in all_surjections(n) {
            let p = eta[n] as i32;
            map.insert(eta, at);
            at += complex.dim(p);
        }
        offsets.push(map);
        dims.push(at);
    }
    let mut out = DkSpace {
        complex,
        space: SimplicialVS { level_cap, dims, faces: Vec::new(), degens: Vec::new() },
        offsets,
    };
    let faces = (0..=level_cap)
        .map(|n| if n == 0 { Vec::new() } else { (0..=n).map(|i| out.theta_star(&crate::surj::coface(i, n), n)).collect() })
        .collect();
    let degens = (0..=level_cap)
        .map(|n| {
            if n == level_cap {
                Vec::new()
            } else {
                (0..=n).map(|i| out.theta_star(&crate::surj::codegeneracy(i, n), n)).collect()
            }
        })
        .collect();
    out.space.faces = faces;
    out.space.degens = degens;
    Ok(out)
}

impl DkSpace {
    pub fn level_cap(&self) -> usize {
        self.space.level_cap
    }

    pub fn offset(&self, n: usize, eta: &[usize]) -> usize {
        self.offsets[n][eta]
    }

    /// The surjections indexing level `n`, in basis order.
    pub fn components(&self, n: usize) -> Vec<&Surjection> {
        let mut v: Vec<(&Surjection, &usize)> = self.offsets[n].iter().collect();
        v.sort_by_key(|(_, &at)| at);
        v.into_iter().map(|(k, _)| k).collect()
    }

    /// `θ*` for `θ : [m] → [n]`, assembled per component.
    pub fn theta_star(&self, theta: &[usize], n: usize) -> Matrix {
        let m = theta.len() - 1;
        let a = &self.complex;
        let mut out = Matrix::zeros(self.space.dims[m], self.space.dims[n]);
        for (eta, &col) in &self.offsets[n] {
            let p = eta[n];
            let dim_p = a.dim(p as i32);
            if dim_p == 0 {
                continue;
            }
            let (eps, rho) = epi_mono(&compose(eta, theta));
            let q = rho.len() - 1;
            let row = self.offsets[m][&eps];
            if is_identity(&rho) && q == p {
                out.set_block(row, col, &Matrix::identity(dim_p));
            } else if q + 1 == p && is_identity(&rho) {
                // ρ = δ_p: the image misses only p
                let block = a.d_out(p as i32).scale(&Scalar::sign(p as i64));
                out.set_block(row, col, &block);
            }
        }
        out
    }

    /// The vector of level `n` with `a` in the component `η`.
    pub fn embed(&self, n: usize, eta: &[usize], a: &[Scalar]) -> Vector {
        let mut v = vector::zeros(self.space.dims[n]);
        let at = self.offset(n, eta);
        v[at..at + a.len()].clone_from_slice(a);
        v
    }

    /// The `η` component of a level-`n` vector.
    pub fn read(&self, n: usize, eta: &[usize], v: &[Scalar]) -> Vector {
        let at = self.offset(n, eta);
        let p = eta[n] as i32;
        v[at..at + self.complex.dim(p)].to_vec()
    }

    /// `π_n`: the component at `η = id`, the highest degree one.
    pub fn top(&self, n: usize, v: &[Scalar]) -> Vector {
        let id: Vec<usize> = (0..=n).collect();
        self.read(n, &id, v)
    }

    /// `N(DK(A))` in the canonical basis: `N_n = A_n[id]`.
    pub fn canonical_normalized(&self) -> Normalized {
        let cap = self.level_cap();
        let mut inclusions = Vec::new();
        let mut projections = Vec::new();
        for n in 0..=cap {
            let id: Vec<usize> = (0..=n).collect();
            let dim = self.complex.dim(n as i32);
            let at = self.offset(n, &id);
            let mut incl = Matrix::zeros(self.space.dims[n], dim);
            incl.set_block(at, 0, &Matrix::identity(dim));
            projections.push(incl.transpose());
            inclusions.push(incl);
        }
        Normalized { complex: self.complex.clone(), inclusions, projections }
    }
}

/// Outcome of checking `d_n(π_n(ā)) = Σ_j (−1)^j π_{n−1}(d_j ā)` on a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryReport {
    pub n: usize,
    pub checked: usize,
    /// Basis indices of `DK(A)_n` where the two sides differ.
    pub failures: Vec<usize>,
}

impl BoundaryReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn pi_boundary_check(x: &DkSpace, n: usize) -> Result<BoundaryReport, DkError> {
    if n > x.level_cap() {
        return Err(DkError::OutOfCap { level: n, cap: x.level_cap() });
    }
    let dim = x.space.dims[n];
    let mut failures = Vec::new();
    if n > 0 {
        let dn = x.complex.d_out(n as i32);
        for b in 0..dim {
            let e = vector::unit(dim, b);
            let lhs = dn.mul_vec(&x.top(n, &e))?;
            let mut rhs = vector::zeros(x.complex.dim(n as i32 - 1));
            for j in 0..=n {
                let face = x.space.face(n, j).mul_vec(&e)?;
                vector::axpy(&mut rhs, &Scalar::sign(j as i64), &x.top(n - 1, &face));
            }
            if lhs != rhs {
                failures.push(b);
            }
        }
    }
    Ok(BoundaryReport { n, checked: dim, failures })
}
