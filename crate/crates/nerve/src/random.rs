//! Random valid simplices.
//!
//! Strings with `i₁ = i₀ + 1` are free; every other string `T` is solved from
//! the structure equation of `T ∪ {t₀ + 1}`, where it appears as the face
//! `j = 1`. This pairs free and solved strings bijectively, and processing
//! by length and then by span `i_k − i₀` only ever reads values that are
//! already set. In effect each `n`-simplex is built by iterated `Λ_1` fills
//! with random interiors.

use dgn_ainfty::AInfinity;
use dgn_core::{vector, Matrix, Scalar, Vector};
use rand::Rng;

use crate::simplex::strings;
use crate::structure::{face_string, solve_face_value, EpsilonReading};
use crate::{NerveError, NerveSimplex};

fn small(rng: &mut impl Rng) -> Scalar {
    Scalar::from_int(rng.gen_range(-2..=2))
}

/// Random element of `Hom^deg(x, y)`.
pub fn random_homogeneous(c: &dyn AInfinity, x: usize, y: usize, deg: i32, rng: &mut impl Rng) -> Vector {
    let h = c.hom(x, y);
    let mut v = vector::zeros(h.dim());
    for b in h.basis_in_degree(deg) {
        v[b] = small(rng);
    }
    v
}

/// Random `m₁`-closed degree-0 element of `Hom(x, y)`.
pub fn random_closed(c: &dyn AInfinity, x: usize, y: usize, rng: &mut impl Rng) -> Vector {
    let h = c.hom(x, y);
    let src = h.basis_in_degree(0);
    let cols: Vec<Vector> = src.iter().map(|&b| c.m(&[x, y], &[&vector::unit(h.dim(), b)])).collect();
    let d = Matrix::from_columns(&cols, h.dim());
    let ker = d.kernel();
    let mut v = vector::zeros(h.dim());
    for j in 0..ker.cols() {
        let coeff = small(rng);
        for (i, &b) in src.iter().enumerate() {
            v[b] = &v[b] + &(&coeff * ker.get(i, j));
        }
    }
    v
}

pub fn random_simplex(c: &dyn AInfinity, objects: Vec<usize>, rng: &mut impl Rng) -> Result<NerveSimplex, NerveError> {
    let mut s = NerveSimplex::zero(c, objects);
    let n = s.n;
    for i in 0..n {
        let (a, b) = (s.objects[i], s.objects[i + 1]);
        s.set(&[i, i + 1], random_closed(c, a, b, rng));
    }
    for k in 2..=n {
        let mut free: Vec<Vec<usize>> =
            strings(n).into_iter().filter(|st| st.len() == k + 1 && st[1] == st[0] + 1).collect();
        free.sort_by_key(|st| (st[k] - st[0], st.clone()));
        for st in free {
            let (a, b) = s.hom_objects(&st);
            s.set(&st, random_homogeneous(c, a, b, 1 - k as i32, rng));
            let v = solve_face_value(c, &s, &st, 1, EpsilonReading::BlockSizes)?;
            s.set(&face_string(&st, 1), v);
        }
    }
    Ok(s)
}
