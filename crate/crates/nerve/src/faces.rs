//! Faces and degeneracies as precomposition with `(δ_j)_*` and `(σ_j)_*`.

use dgn_ainfty::{compose_functors, AInfinity};

use crate::simplex::{from_functor, to_functor};
use crate::standard::{codegeneracy_functor, coface_functor, standard_simplex_category};
use crate::{NerveError, NerveSimplex};

/// `d_j(f) = f∘(δ_j)_*`.
pub fn face(c: &dyn AInfinity, s: &NerveSimplex, j: usize) -> Result<NerveSimplex, NerveError> {
    if s.n == 0 || j > s.n {
        return Err(NerveError::OutOfRange { index: j, n: s.n });
    }
    let f = to_functor(c, s)?;
    let delta = coface_functor(j, s.n)?;
    let src = standard_simplex_category(s.n - 1);
    let e = compose_functors(&f, &delta, &src, c, (s.n - 1).max(1))?;
    Ok(from_functor(c, &e, s.n - 1))
}

/// `s_j(f) = f∘(σ_j)_*`.
pub fn degeneracy(c: &dyn AInfinity, s: &NerveSimplex, j: usize) -> Result<NerveSimplex, NerveError> {
    if j > s.n {
        return Err(NerveError::OutOfRange { index: j, n: s.n });
    }
    let f = to_functor(c, s)?;
    let sigma = codegeneracy_functor(j, s.n + 1)?;
    let src = standard_simplex_category(s.n + 1);
    let e = compose_functors(&f, &sigma, &src, c, s.n + 1)?;
    Ok(from_functor(c, &e, s.n + 1))
}
