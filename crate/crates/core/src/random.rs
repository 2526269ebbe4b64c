//! Seeded random instances: small integer matrices and complexes.

use rand::Rng;

use crate::complex::{ChainComplex, Grading};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::vector::Vector;

/// Entries drawn uniformly from `-2..=2`.
pub fn small(field: Field, rng: &mut impl Rng) -> Scalar {
    field.int(rng.gen_range(-2..=2))
}

pub fn matrix(field: Field, rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small(field, rng))
}

pub fn vector(field: Field, n: usize, rng: &mut impl Rng) -> Vector {
    (0..n).map(|_| small(field, rng)).collect()
}

/// A random combination of the columns of `basis`.
pub fn combination(field: Field, basis: &Matrix, rng: &mut impl Rng) -> Vector {
    let c = vector(field, basis.cols(), rng);
    basis.mul_vec(&c).expect("length matches column count")
}

/// A random complex with the given level dimensions. Each differential is a
/// random combination of the rows killing the previous one, so d∘d = 0 holds
/// by construction.
pub fn complex(field: Field, grading: Grading, lo: i32, dims: &[usize], rng: &mut impl Rng) -> ChainComplex {
    let n = dims.len();
    // walk in the direction of the differential
    let order: Vec<usize> = match grading {
        Grading::Cochain => (0..n).collect(),
        Grading::Chain => (0..n).rev().collect(),
    };
    let mut d = vec![Matrix::zeros(0, 0); n];
    let mut prev: Option<Matrix> = None;
    for (pos, &k) in order.iter().enumerate() {
        let next_dim = order.get(pos + 1).map_or(0, |&j| dims[j]);
        let m = match &prev {
            None => matrix(field, next_dim, dims[k], rng),
            Some(p) => {
                // rows r with r·p = 0
                let left = p.transpose().kernel().transpose();
                let coeffs = matrix(field, next_dim, left.rows(), rng);
                coeffs.mul(&left).expect("shapes")
            }
        };
        prev = Some(m.clone());
        d[k] = m;
    }
    ChainComplex::new(grading, lo, dims.to_vec(), d).expect("d∘d = 0 by construction")
}
