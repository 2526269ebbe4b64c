//! Hom complexes between bounded cochain complexes.
//!
//! An element of `Hom^k(A, B)` is a family `f_i: A^i → B^{i+k}`. All degrees
//! are stored in one coordinate vector: blocks are ordered by `k`, then by `i`,
//! and each block is laid out row-major (target index slowest).

use std::collections::BTreeMap;

use crate::complex::{ChainComplex, Grading};
use crate::graded::GradedSpace;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::vector::{self, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Block {
    k: i32,
    i: i32,
    offset: usize,
    rows: usize,
    cols: usize,
}

/// The graded space `Hom^•(A, B)` with its block layout.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub src: ChainComplex,
    pub tgt: ChainComplex,
    blocks: Vec<Block>,
    lookup: BTreeMap<(i32, i32), usize>,
    space: GradedSpace,
}

fn as_cochain(c: &ChainComplex) -> ChainComplex {
    match c.grading {
        Grading::Cochain => c.clone(),
        Grading::Chain => c.op(),
    }
}

impl HomSpace {
    /// Chain complexes are read as cochain complexes via `A^i = A_{−i}`.
    pub fn new(src: &ChainComplex, tgt: &ChainComplex) -> Self {
        let (src, tgt) = (as_cochain(src), as_cochain(tgt));
        let mut blocks = Vec::new();
        let mut lookup = BTreeMap::new();
        let mut basis = Vec::new();
        let mut offset = 0;
        for k in (tgt.lo - src.hi())..=(tgt.hi() - src.lo) {
            for i in src.levels() {
                let (rows, cols) = (tgt.dim(i + k), src.dim(i));
                if rows * cols == 0 {
                    continue;
                }
                lookup.insert((k, i), blocks.len());
                blocks.push(Block { k, i, offset, rows, cols });
                for r in 0..rows {
                    for c in 0..cols {
                        basis.push((format!("h{k}.{i}.{r}.{c}"), k));
                    }
                }
                offset += rows * cols;
            }
        }
        let space = GradedSpace::new(basis).expect("generated labels are unique");
        HomSpace { src, tgt, blocks, lookup, space }
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Degrees with a nonzero slice.
    pub fn degrees(&self) -> Vec<i32> {
        let mut ks: Vec<i32> = self.blocks.iter().map(|b| b.k).collect();
        ks.dedup();
        ks
    }

    /// Coordinate range of the degree-`k` slice.
    pub fn degree_range(&self, k: i32) -> std::ops::Range<usize> {
        let mut it = self.blocks.iter().filter(|b| b.k == k);
        match it.next() {
            None => 0..0,
            Some(first) => {
                let last = it.last().unwrap_or(first);
                first.offset..last.offset + last.rows * last.cols
            }
        }
    }

    /// The component `f_i: A^i → B^{i+k}` of `v`.
    pub fn block(&self, v: &[Scalar], k: i32, i: i32) -> Matrix {
        match self.lookup.get(&(k, i)) {
            None => Matrix::zeros(self.tgt.dim(i + k), self.src.dim(i)),
            Some(&b) => {
                let b = &self.blocks[b];
                Matrix::from_fn(b.rows, b.cols, |r, c| v[b.offset + r * b.cols + c].clone())
            }
        }
    }

    /// Adds the component `m: A^i → B^{i+k}` into `v`.
    pub fn add_block(&self, v: &mut [Scalar], k: i32, i: i32, m: &Matrix) {
        let Some(&b) = self.lookup.get(&(k, i)) else {
            debug_assert!(m.is_zero(), "nonzero block outside the hom window");
            return;
        };
        let b = &self.blocks[b];
        for r in 0..b.rows {
            for c in 0..b.cols {
                let x = m.get(r, c);
                if !x.is_zero() {
                    v[b.offset + r * b.cols + c] += x;
                }
            }
        }
    }

    pub fn identity(&self) -> Vector {
        let mut v = vector::zeros(self.dim());
        for i in self.src.levels() {
            self.add_block(&mut v, 0, i, &Matrix::identity(self.src.dim(i)));
        }
        v
    }

    /// `D(f)_i = f_{i+1}∘d_A + (−1)^{k+1} d_B∘f_i` on each homogeneous piece.
    pub fn differential(&self, v: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.dim());
        for k in self.degrees() {
            let sign = Scalar::sign((k + 1) as i64);
            for i in self.src.levels() {
                let a = self.block(v, k, i + 1).mul(&self.src.d_out(i)).expect("shapes");
                let b = self.tgt.d_out(i + k).mul(&self.block(v, k, i)).expect("shapes");
                self.add_block(&mut out, k + 1, i, &a.add(&b.scale(&sign)).expect("shapes"));
            }
        }
        out
    }

    /// The cochain complex `Hom^•(A, B)`.
    pub fn complex(&self) -> ChainComplex {
        let ks = self.degrees();
        let (lo, hi) = match (ks.first(), ks.last()) {
            (Some(&lo), Some(&hi)) => (lo, hi),
            _ => return ChainComplex::zero(Grading::Cochain),
        };
        let mut dims = Vec::new();
        let mut d = Vec::new();
        for k in lo..=hi {
            let src = self.degree_range(k);
            let tgt = self.degree_range(k + 1);
            let mut m = Matrix::zeros(if k < hi { tgt.len() } else { 0 }, src.len());
            for (c, idx) in src.clone().enumerate() {
                let img = self.differential(&vector::unit(self.dim(), idx));
                if k < hi {
                    for (r, t) in tgt.clone().enumerate() {
                        m.set(r, c, img[t].clone());
                    }
                }
            }
            dims.push(src.len());
            d.push(m);
        }
        ChainComplex::new(Grading::Cochain, lo, dims, d).expect("hom differential squares to zero")
    }

    /// Embeds a degree-`k` slice vector into the full coordinate vector.
    pub fn from_slice(&self, k: i32, slice: &[Scalar]) -> Vector {
        let mut v = vector::zeros(self.dim());
        let r = self.degree_range(k);
        assert_eq!(r.len(), slice.len(), "slice length");
        v[r].clone_from_slice(slice);
        v
    }

    pub fn slice(&self, v: &[Scalar], k: i32) -> Vector {
        v[self.degree_range(k)].to_vec()
    }
}

/// Plain composition `g∘f` with `(g∘f)_i = g_{i+k}∘f_i`, no Koszul sign.
pub fn compose_hom(gs: &HomSpace, g: &[Scalar], fs: &HomSpace, f: &[Scalar], out: &HomSpace) -> Vector {
    let mut v = vector::zeros(out.dim());
    for k in fs.degrees() {
        for l in gs.degrees() {
            for i in fs.src.levels() {
                let fi = fs.block(f, k, i);
                if fi.is_zero() {
                    continue;
                }
                let gi = gs.block(g, l, i + k);
                if gi.is_zero() {
                    continue;
                }
                out.add_block(&mut v, k + l, i, &gi.mul(&fi).expect("shapes"));
            }
        }
    }
    v
}

/// The cochain complex `Hom^•(A, B)` with `d(f) = f∘d_A + (−1)^{k+1} d_B∘f`.
pub fn hom_complex(a: &ChainComplex, b: &ChainComplex) -> ChainComplex {
    HomSpace::new(a, b).complex()
}
