//! Hom spaces of the homotopy category `h(N(C))`, computed from simplices.
//!
//! Morphisms `x → y` are valid 1-simplices; `f ~ g` when some 2-simplex on
//! `(x, y, y)` has edges `f₀₁ = f`, `f₁₂ = 1_y`, `f₀₂ = g`. The relation is
//! linear, so the hom is a quotient of vector spaces.

use dgn_ainfty::AInfinity;
use dgn_core::{vector, Matrix, Vector};

use crate::structure::{solve_face_value, structure_defect, EpsilonReading};
use crate::{NerveError, NerveSimplex};

fn restrict(v: &[dgn_core::Scalar], coords: &[usize]) -> Vector {
    coords.iter().map(|&i| v[i].clone()).collect()
}

/// Columns `g − f` (degree-0 coordinates) over a basis of 2-simplex interiors.
pub fn homotopy_relation_space(c: &dyn AInfinity, x: usize, y: usize) -> Result<Matrix, NerveError> {
    let h = c.hom(x, y);
    let coords = h.basis_in_degree(0);
    let unit = c.unit(y).ok_or(NerveError::NoUnit(y))?;
    let mut cols = Vec::new();
    for b in h.basis_in_degree(-1) {
        let mut s = NerveSimplex::zero(c, vec![x, y, y]);
        s.set(&[1, 2], unit.clone());
        s.set(&[0, 1, 2], vector::unit(h.dim(), b));
        let g = solve_face_value(c, &s, &[0, 1, 2], 1, EpsilonReading::BlockSizes)?;
        s.set(&[0, 2], g.clone());
        debug_assert!(crate::validate_simplex(c, &s).map(|r| r.passed()).unwrap_or(false));
        // f₀₁ = 0
        cols.push(restrict(&g, &coords));
    }
    Ok(Matrix::from_columns(&cols, coords.len()))
}

/// `dim Hom_{h(N(C))}(x, y)`: valid 1-simplices modulo the 2-simplex relation.
pub fn homotopy_category_dim(c: &dyn AInfinity, x: usize, y: usize) -> Result<usize, NerveError> {
    let h = c.hom(x, y);
    let coords = h.basis_in_degree(0);
    let mut defects = Vec::new();
    for &b in &coords {
        let mut s = NerveSimplex::zero(c, vec![x, y]);
        s.set(&[0, 1], vector::unit(h.dim(), b));
        defects.push(structure_defect(c, &s, &[0, 1], EpsilonReading::BlockSizes)?);
    }
    let valid = Matrix::from_columns(&defects, h.dim()).kernel().cols();
    Ok(valid - homotopy_relation_space(c, x, y)?.rank())
}
