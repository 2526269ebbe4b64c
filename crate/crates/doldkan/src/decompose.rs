//! The inverse of the canonical iso `⊕_η η*(N_p) ≅ X_n`.
//!
//! Every `x ∈ X_n` is uniquely `Σ_η η*(c_η)` with `c_η` normalized. The
//! decomposition is found by inverting the matrix whose blocks are
//! `η* ∘ incl_p`, built once per level.

use std::collections::BTreeMap;

use dgn_core::{vector, Matrix, Scalar, Vector};

use crate::simplicial::{Normalized, SimplicialVS};
use crate::surj::{all_surjections, Surjection};
use crate::DkError;

#[derive(Clone, Debug)]
pub struct Decomposer {
    pub n: usize,
    blocks: Vec<(Surjection, usize, Matrix)>,
    inverse: Matrix,
}

impl Decomposer {
    pub fn new(x: &SimplicialVS, norm: &Normalized, n: usize) -> Result<Self, DkError> {
        if n > x.level_cap {
            return Err(DkError::OutOfCap { level: n, cap: x.level_cap });
        }
        let mut big = Matrix::zeros(x.dim(n), 0);
        let mut blocks = Vec::new();
        for eta in all_surjections(n) {
            let p = eta[n];
            if norm.inclusions[p].cols() == 0 {
                continue;
            }
            let at = big.cols();
            big = big.hstack(&x.operator(&eta, p)?.mul(&norm.inclusions[p])?)?;
            blocks.push((eta, at, norm.inclusions[p].clone()));
        }
        if big.cols() != x.dim(n) || big.rank() != x.dim(n) {
            return Err(DkError::Identity(format!("the degenerate images of N do not decompose X_{n}")));
        }
        let inverse = big.solve_matrix(&Matrix::identity(x.dim(n))).expect("square and of full rank");
        Ok(Decomposer { n, blocks, inverse })
    }

    /// `{η ↦ c_η}` with `c_η ∈ X_p` normalized; zero components are kept.
    pub fn decompose(&self, v: &[Scalar]) -> Result<BTreeMap<Surjection, Vector>, DkError> {
        let coords = self.inverse.mul_vec(v)?;
        let mut out = BTreeMap::new();
        for (eta, at, incl) in &self.blocks {
            let c = incl.mul_vec(&coords[*at..*at + incl.cols()])?;
            out.insert(eta.clone(), c);
        }
        Ok(out)
    }
}

pub fn decompose(x: &SimplicialVS, n: usize, v: &[Scalar]) -> Result<BTreeMap<Surjection, Vector>, DkError> {
    if v.len() != x.dim(n) {
        return Err(DkError::Length { expected: x.dim(n), got: v.len() });
    }
    let norm = Normalized::new(x)?;
    Decomposer::new(x, &norm, n)?.decompose(v)
}

/// `Σ_η η*(c_η)` at level `n`.
pub fn reassemble(x: &SimplicialVS, n: usize, comps: &BTreeMap<Surjection, Vector>) -> Result<Vector, DkError> {
    let mut out = vector::zeros(x.dim(n));
    for (eta, c) in comps {
        let p = eta[n];
        let image = x.operator(eta, p)?.mul_vec(c)?;
        vector::axpy(&mut out, &Scalar::one(), &image);
    }
    Ok(out)
}
