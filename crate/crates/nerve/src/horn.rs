use dgn_ainfty::AInfinity;
use dgn_core::vector;

use crate::structure::{face_string, solve_face_value, EpsilonReading};
use crate::{NerveError, NerveSimplex};

/// An inner horn `Λⁿ_p`: a simplex with `f_{0…n}` and `f_{0…p̂…n}` absent.
#[derive(Clone, Debug, PartialEq)]
pub struct HornData {
    pub n: usize,
    pub p: usize,
    pub simplex: NerveSimplex,
}

impl HornData {
    pub fn missing(&self) -> [Vec<usize>; 2] {
        let top: Vec<usize> = (0..=self.n).collect();
        let face = face_string(&top, self.p);
        [top, face]
    }
}

/// Forgets the two components a horn does not carry.
pub fn horn_of(s: &NerveSimplex, p: usize) -> Result<HornData, NerveError> {
    if p == 0 || p >= s.n {
        return Err(NerveError::NotInner { n: s.n, p });
    }
    let mut h = HornData { n: s.n, p, simplex: s.clone() };
    for m in h.missing() {
        h.simplex.components.remove(&m);
    }
    Ok(h)
}

/// Fills with `f_{0…n} = 0` and solves the top structure equation for the
/// missing face.
pub fn fill_inner_horn(c: &dyn AInfinity, h: &HornData) -> Result<NerveSimplex, NerveError> {
    fill_inner_horn_with(c, h, EpsilonReading::BlockSizes)
}

pub fn fill_inner_horn_with(c: &dyn AInfinity, h: &HornData, reading: EpsilonReading) -> Result<NerveSimplex, NerveError> {
    if h.p == 0 || h.p >= h.n {
        return Err(NerveError::NotInner { n: h.n, p: h.p });
    }
    let [top, face] = h.missing();
    let mut s = h.simplex.clone();
    let (a, b) = s.hom_objects(&top);
    s.set(&top, vector::zeros(c.hom(a, b).dim()));
    let v = solve_face_value(c, &s, &top, h.p, reading)?;
    s.set(&face, v);
    Ok(s)
}
