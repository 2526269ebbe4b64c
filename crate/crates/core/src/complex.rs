//! Bounded chain and cochain complexes, homology and chain maps.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::graded::GradedSpace;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::vector::Vector;

/// Whether the differential lowers (chain) or raises (cochain) the level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Grading {
    Chain,
    Cochain,
}

impl Grading {
    pub fn step(self) -> i32 {
        match self {
            Grading::Chain => -1,
            Grading::Cochain => 1,
        }
    }
}

/// A complex on the levels `lo ..= lo + dims.len() - 1`; everything outside
/// the window is zero.
///
/// `d[k]` is the differential leaving level `lo + k`, as a matrix with
/// `dim(lo + k + step)` rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainComplex {
    pub grading: Grading,
    pub lo: i32,
    pub dims: Vec<usize>,
    pub d: Vec<Matrix>,
}

impl ChainComplex {
    pub fn new(grading: Grading, lo: i32, dims: Vec<usize>, d: Vec<Matrix>) -> Result<Self, CoreError> {
        let c = ChainComplex { grading, lo, dims, d };
        c.check_shapes()?;
        c.check_square_zero()?;
        Ok(c)
    }

    /// Same as [`ChainComplex::new`] without the d∘d check.
    pub fn new_unchecked(grading: Grading, lo: i32, dims: Vec<usize>, d: Vec<Matrix>) -> Result<Self, CoreError> {
        let c = ChainComplex { grading, lo, dims, d };
        c.check_shapes()?;
        Ok(c)
    }

    pub fn zero(grading: Grading) -> Self {
        ChainComplex { grading, lo: 0, dims: vec![], d: vec![] }
    }

    fn check_shapes(&self) -> Result<(), CoreError> {
        if self.d.len() != self.dims.len() {
            return Err(CoreError::DimensionMismatch { expected: self.dims.len(), got: self.d.len() });
        }
        for (k, m) in self.d.iter().enumerate() {
            let n = self.lo + k as i32;
            let t = self.dim(n + self.grading.step());
            if m.rows() != t {
                return Err(CoreError::DimensionMismatch { expected: t, got: m.rows() });
            }
            if m.cols() != self.dims[k] {
                return Err(CoreError::DimensionMismatch { expected: self.dims[k], got: m.cols() });
            }
        }
        Ok(())
    }

    pub fn check_square_zero(&self) -> Result<(), CoreError> {
        for n in self.levels() {
            let dd = self.d_out(n + self.grading.step()).mul(&self.d_out(n))?;
            if !dd.is_zero() {
                return Err(CoreError::NotAComplex(n));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check_shapes().is_ok() && self.check_square_zero().is_ok()
    }

    /// Highest level of the window (`lo - 1` when empty).
    pub fn hi(&self) -> i32 {
        self.lo + self.dims.len() as i32 - 1
    }

    pub fn levels(&self) -> std::ops::RangeInclusive<i32> {
        self.lo..=self.hi()
    }

    pub fn dim(&self, n: i32) -> usize {
        if n < self.lo || n > self.hi() {
            0
        } else {
            self.dims[(n - self.lo) as usize]
        }
    }

    /// The differential leaving level `n`.
    pub fn d_out(&self, n: i32) -> Matrix {
        if n < self.lo || n > self.hi() {
            Matrix::zeros(self.dim(n + self.grading.step()), self.dim(n))
        } else {
            self.d[(n - self.lo) as usize].clone()
        }
    }

    /// The differential arriving at level `n`.
    pub fn d_in(&self, n: i32) -> Matrix {
        self.d_out(n - self.grading.step())
    }

    /// The tensor product with `d(a⊗b) = da⊗b + (−1)^{|a|} a⊗db`.
    ///
    /// Level `n` is the sum of the blocks `A_p ⊗ B_{n−p}` with `p` ascending,
    /// each laid out as in [`Matrix::kron`].
    pub fn tensor(&self, other: &ChainComplex) -> ChainComplex {
        assert_eq!(self.grading, other.grading, "tensor of complexes with different gradings");
        if self.dims.is_empty() || other.dims.is_empty() {
            return ChainComplex::zero(self.grading);
        }
        let lo = self.lo + other.lo;
        let hi = self.hi() + other.hi();
        let step = self.grading.step();
        let dims: Vec<usize> = (lo..=hi).map(|n| self.tensor_dim(other, n)).collect();
        let mut d = Vec::new();
        for n in lo..=hi {
            let mut m = Matrix::zeros(self.tensor_dim(other, n + step), self.tensor_dim(other, n));
            for p in self.levels() {
                let q = n - p;
                if other.dim(q) == 0 || self.dim(p) == 0 {
                    continue;
                }
                let col = self.tensor_offset(other, n, p);
                if self.dim(p + step) > 0 && other.dim(q) > 0 {
                    let da = self.d_out(p).kron(&Matrix::identity(other.dim(q)));
                    m.set_block(self.tensor_offset(other, n + step, p + step), col, &da);
                }
                if other.dim(q + step) > 0 {
                    let sign = Scalar::sign(p as i64);
                    let db = Matrix::identity(self.dim(p)).kron(&other.d_out(q)).scale(&sign);
                    m.set_block(self.tensor_offset(other, n + step, p), col, &db);
                }
            }
            d.push(m);
        }
        ChainComplex { grading: self.grading, lo, dims, d }
    }

    pub fn tensor_dim(&self, other: &ChainComplex, n: i32) -> usize {
        self.levels().map(|p| self.dim(p) * other.dim(n - p)).sum()
    }

    /// Where the block `A_p ⊗ B_{n−p}` starts inside level `n` of the tensor.
    pub fn tensor_offset(&self, other: &ChainComplex, n: i32, p: i32) -> usize {
        (self.lo..p).map(|r| self.dim(r) * other.dim(n - r)).sum()
    }

    /// Level `n` as a graded space concentrated in degree `n`.
    pub fn space(&self, n: i32) -> GradedSpace {
        let basis = (0..self.dim(n)).map(|i| (format!("c{n}.{i}"), n)).collect();
        GradedSpace::new(basis).expect("generated labels are unique")
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn homology_dim(&self, n: i32) -> usize {
        let z = self.dim(n) - self.d_out(n).rank();
        z - self.d_in(n).rank()
    }

    /// Homology dimension per level of the window.
    pub fn homology(&self) -> BTreeMap<i32, usize> {
        self.levels().map(|n| (n, self.homology_dim(n))).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.levels().all(|n| self.homology_dim(n) == 0)
    }

    /// Cycle representatives of a basis of homology at level `n`.
    pub fn homology_basis(&self, n: i32) -> HomologyBasis {
        let boundaries = self.d_in(n).image();
        let cycles = self.d_out(n).kernel();
        let reps = Matrix::extend_basis(&boundaries, &cycles);
        HomologyBasis { boundaries, reps }
    }

    /// `n ↦ −n`, switching between chain and cochain grading.
    pub fn op(&self) -> ChainComplex {
        let grading = match self.grading {
            Grading::Chain => Grading::Cochain,
            Grading::Cochain => Grading::Chain,
        };
        let dims: Vec<usize> = self.dims.iter().rev().cloned().collect();
        let d: Vec<Matrix> = self.d.iter().rev().cloned().collect();
        ChainComplex { grading, lo: -self.hi(), dims, d }
    }

    /// Restricts to a subcomplex given by a basis (as columns) of each level.
    /// The bases must be closed under `d`.
    pub fn subcomplex(&self, bases: &BTreeMap<i32, Matrix>) -> Result<ChainComplex, CoreError> {
        let lo = *bases.keys().next().unwrap_or(&0);
        let hi = *bases.keys().last().unwrap_or(&-1);
        let basis_at = |n: i32| bases.get(&n).cloned().unwrap_or_else(|| Matrix::zeros(self.dim(n), 0));
        let mut dims = Vec::new();
        let mut d = Vec::new();
        for n in lo..=hi {
            let b = basis_at(n);
            let t = basis_at(n + self.grading.step());
            let img = self.d_out(n).mul(&b)?;
            let coords = t.solve_matrix(&img).ok_or(CoreError::Inconsistent)?;
            dims.push(b.cols());
            d.push(if (lo..=hi).contains(&(n + self.grading.step())) {
                coords
            } else {
                if !img.is_zero() {
                    return Err(CoreError::Inconsistent);
                }
                Matrix::zeros(0, b.cols())
            });
        }
        ChainComplex::new(self.grading, lo, dims, d)
    }
}

/// Boundaries and a complement of them inside the cycles.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    pub boundaries: Matrix,
    pub reps: Matrix,
}

impl HomologyBasis {
    pub fn dim(&self) -> usize {
        self.reps.cols()
    }

    /// Coordinates of the class of a cycle `z` in the representative basis.
    pub fn classify(&self, z: &[Scalar]) -> Result<Vector, CoreError> {
        let both = self.boundaries.hstack(&self.reps)?;
        let x = both.solve(z).ok_or(CoreError::Inconsistent)?;
        Ok(x[self.boundaries.cols()..].to_vec())
    }
}

/// `τ≥0` of a chain complex, with the inclusion of the new level 0 into the
/// old one (columns span `Ker d_0`).
pub fn truncate_nonneg_with_inclusion(c: &ChainComplex) -> (ChainComplex, Matrix) {
    assert_eq!(c.grading, Grading::Chain, "truncation is defined on chain complexes");
    let hi = c.hi().max(-1);
    let k = c.d_out(0).kernel();
    if hi < 0 {
        return (ChainComplex::zero(Grading::Chain), k);
    }
    let mut dims = vec![k.cols()];
    let mut d = vec![Matrix::zeros(0, k.cols())];
    for n in 1..=hi {
        dims.push(c.dim(n));
        let m = c.d_out(n);
        d.push(if n == 1 {
            // d_1 lands in Ker d_0
            k.solve_matrix(&m).expect("image of d_1 lies in Ker d_0")
        } else {
            m
        });
    }
    (ChainComplex { grading: Grading::Chain, lo: 0, dims, d }, k)
}

pub fn truncate_nonneg(c: &ChainComplex) -> ChainComplex {
    truncate_nonneg_with_inclusion(c).0
}

pub fn op_complex(c: &ChainComplex) -> ChainComplex {
    c.op()
}

/// A degree-preserving map of complexes given levelwise; missing levels are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub maps: BTreeMap<i32, Matrix>,
}

impl ChainMap {
    pub fn at(&self, src: &ChainComplex, tgt: &ChainComplex, n: i32) -> Matrix {
        self.maps.get(&n).cloned().unwrap_or_else(|| Matrix::zeros(tgt.dim(n), src.dim(n)))
    }

    pub fn is_chain_map(&self, src: &ChainComplex, tgt: &ChainComplex) -> bool {
        let lo = src.lo.min(tgt.lo) - 1;
        let hi = src.hi().max(tgt.hi()) + 1;
        (lo..=hi).all(|n| {
            let m = n + src.grading.step();
            let left = tgt.d_out(n).mul(&self.at(src, tgt, n)).expect("shapes");
            let right = self.at(src, tgt, m).mul(&src.d_out(n)).expect("shapes");
            left == right
        })
    }

    /// Matrix of the induced map on homology at level `n`, in the
    /// representative bases of [`ChainComplex::homology_basis`].
    pub fn induced(&self, src: &ChainComplex, tgt: &ChainComplex, n: i32) -> Result<Matrix, CoreError> {
        let hs = src.homology_basis(n);
        let ht = tgt.homology_basis(n);
        let f = self.at(src, tgt, n);
        let mut cols = Vec::new();
        for z in hs.reps.columns() {
            cols.push(ht.classify(&f.mul_vec(&z)?)?);
        }
        Ok(Matrix::from_columns(&cols, ht.dim()))
    }

    /// Chain map inducing isomorphisms on homology at every level.
    pub fn is_quasi_iso(&self, src: &ChainComplex, tgt: &ChainComplex) -> Result<bool, CoreError> {
        if !self.is_chain_map(src, tgt) {
            return Ok(false);
        }
        let lo = src.lo.min(tgt.lo);
        let hi = src.hi().max(tgt.hi());
        for n in lo..=hi {
            let (a, b) = (src.homology_dim(n), tgt.homology_dim(n));
            if a != b {
                return Ok(false);
            }
            if a > 0 && self.induced(src, tgt, n)?.rank() != a {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
