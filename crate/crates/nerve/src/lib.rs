//! The simplicial nerve of an A∞-category.
//!
//! An `n`-simplex is an A∞-functor `A∞[Δⁿ] → C`. Because every hom of
//! `A∞[Δⁿ]` is one-dimensional and concentrated in degree 0, such a functor is
//! the same thing as a family `f_{i₀…i_k}` indexed by strictly increasing
//! strings, of degree `1 − k`, with the unit conventions filling in strings
//! that repeat an index.
//!
//! Faces and degeneracies are computed as precomposition with the coface and
//! codegeneracy functors. The structure equation is evaluated directly, term
//! by term; its higher sign uses the block-size reading of `ε_r` that also
//! governs functor composition (see [`structure::EpsilonReading`]).

pub mod faces;
pub mod homotopy;
pub mod horn;
pub mod pushforward;
pub mod random;
pub mod simplex;
pub mod standard;
pub mod structure;

use dgn_ainfty::AInfError;
use dgn_core::CoreError;
use thiserror::Error;

pub use faces::{degeneracy, face};
pub use homotopy::{homotopy_category_dim, homotopy_relation_space};
pub use horn::{fill_inner_horn, fill_inner_horn_with, horn_of, HornData};
pub use pushforward::pushforward;
pub use random::{random_closed, random_simplex};
pub use simplex::{from_functor, strings, to_functor, NerveSimplex};
pub use standard::{codegeneracy_functor, coface_functor, standard_simplex_category};
pub use structure::{dg_defect, structure_defect, validate_simplex, validate_simplex_with, EpsilonReading, SimplexReport};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NerveError {
    #[error(transparent)]
    AInf(#[from] AInfError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("missing component {0}")]
    MissingComponent(String),
    #[error("component {string} has degree {got:?}, expected {expected}")]
    Degree { string: String, expected: i32, got: Option<i32> },
    #[error("index {index} out of range for dimension {n}")]
    OutOfRange { index: usize, n: usize },
    #[error("horn Λ^{n}_{p} is not inner")]
    NotInner { n: usize, p: usize },
    #[error("object {0} has no unit")]
    NoUnit(usize),
    #[error("object map mismatch: {0}")]
    ObjectMismatch(String),
}

/// `"i0.i1.….ik"`
pub fn string_key(s: &[usize]) -> String {
    s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
}

pub fn parse_string_key(key: &str) -> Option<Vec<usize>> {
    key.split('.').map(|t| t.parse().ok()).collect()
}
