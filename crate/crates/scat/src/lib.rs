//! The simplicial category `C[Δⁿ]`, the cubical description of its mapping
//! spaces, and simplices of the big dg-nerve with their comparison to the
//! small dg-nerve.

pub mod big;
pub mod compare;
pub mod cube;
pub mod flags;
pub mod sset;

use dgn_core::CoreError;
use dgn_doldkan::DkError;
use dgn_nerve::NerveError;
use thiserror::Error;

pub use big::{
    big_degeneracy, big_face, constant_big_simplex, flag_value, random_big_simplex, random_big_simplex_in, required_flags,
    validate_big_simplex, validate_big_simplex_in, validate_big_simplex_with, BigNerveSimplex, Composer, BigSimplexReport, MapCache, Relation, DEFAULT_BIG_CAP,
};
pub use compare::{big_to_small, big_to_small_unchecked, comparison_naturality_check, NaturalityReport};
pub use cube::{cube_decomposition, cycle_notation, CubeDecomposition, Facet, FacetKind, Identification};
pub use flags::{flag_key, parse_flag_key, Flag};
pub use sset::{poset_interval, FiniteSimplicialSet};

#[derive(Debug, Error, PartialEq)]
pub enum ScatError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Dk(#[from] DkError),
    #[error(transparent)]
    Nerve(#[from] NerveError),
    #[error("the cube decomposition needs m ≥ 2, got {0}")]
    CubeOrder(usize),
    #[error("flag or index out of range: {0}")]
    FlagRange(String),
    #[error("level {level} exceeds the cap {cap}")]
    LevelCap { level: usize, cap: usize },
    #[error("missing flag {0}")]
    MissingFlag(String),
    #[error("missing face {0}")]
    MissingFace(String),
    #[error("flag {flag} carries {got} entries, expected {expected}")]
    Length { flag: String, expected: usize, got: usize },
    #[error("no filler for the faces of {0}")]
    Obstructed(String),
    #[error("invalid big simplex: {0}")]
    Invalid(String),
    #[error("object {0} out of range")]
    Object(usize),
    #[error("big-nerve data requires a dg-category")]
    NotDg,
}
