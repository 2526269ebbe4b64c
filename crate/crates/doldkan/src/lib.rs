//! Simplicial vector spaces and the Dold-Kan correspondence.
//!
//! Levels are indexed `0..=level_cap`. Monotone maps `[m] → [n]` are passed
//! as their value sequences, so `δ_i` on `[1] → [2]` with `i = 0` is `[1, 2]`.

pub mod awez;
pub mod decompose;
pub mod dk;
pub mod mapping;
pub mod simplicial;
pub mod surj;

use dgn_core::CoreError;
use thiserror::Error;

pub use awez::{aw, ez, ez_tensor, shuffles, AwEz, SignMode};
pub use decompose::{decompose, reassemble, Decomposer};
pub use dk::{dk, pi_boundary_check, BoundaryReport, DkSpace};
pub use mapping::{compose_simplices, mapping_space, MappingSpace, Pairing};
pub use simplicial::{normalized_complex, Normalized, SimplicialVS};
pub use surj::{all_surjections, surjections, SurjTable, Surjection};

/// Default top level of simplicial data.
pub const DEFAULT_LEVEL_CAP: usize = 6;

#[derive(Debug, Error, PartialEq)]
pub enum DkError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("simplicial identity fails: {0}")]
    Identity(String),
    #[error("level {level} exceeds the cap {cap}")]
    OutOfCap { level: usize, cap: usize },
    #[error("complex has nonzero negative levels")]
    NotNonNegative,
    #[error("expected a vector of length {expected}, got {got}")]
    Length { expected: usize, got: usize },
    #[error("Hom({x},{y}) has degree {degree} outside the window of level cap {cap}")]
    WindowOverflow { x: usize, y: usize, degree: i32, cap: usize },
    #[error("the category is not a dg-category")]
    NotDg,
    #[error("object {0} has no unit")]
    NoUnit(usize),
}
