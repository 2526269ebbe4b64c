//! The chain dg-category, twisted complexes over it, cones, path objects and
//! the checks behind stability.

pub mod chain;
pub mod cone;
pub mod path;
pub mod stability;
pub mod twisted;

use dgn_core::CoreError;
use thiserror::Error;

pub use chain::{random_chain_category, random_concentrated_category, random_shapes, ChainDgCategory, ObjectShape};
pub use cone::{cone_hom_matrices, mapping_cone, printed_cone_hom_matrices};
pub use path::{homotopy_pullback, path_complex, pullback_oracle, random_chain_map, Cospan, HomotopyPullback, PathObject};
pub use stability::{
    fiber_cofiber_check, les_check, stability_witnesses, FiberCofiberReport, LesNode, LesReport, QuasiIsoReport,
    WitnessReport,
};
pub use twisted::{
    cone_tw, random_twisted, shift_tw, tw_compose, tw_differential, tw_hom, validate_twisted, McReport, TwElement,
    TwHom, TwistedComplex,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PretrError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("q entry {from}→{to} has degree {got:?}, expected {expected}")]
    Degree { from: usize, to: usize, expected: i32, got: Option<i32> },
    #[error("element has entries outside total degree {0}")]
    NotHomogeneous(i32),
    #[error("the morphism is not closed of degree 0")]
    NotClosed,
    #[error("the carrier is not a dg-category")]
    NotDg,
    #[error("object {0} has no unit")]
    NoUnit(usize),
    #[error("no object {0}")]
    Object(usize),
    #[error("no component {0}")]
    Component(usize),
    #[error("the category has no zero object")]
    MissingZero,
    #[error("{0} is not a chain map")]
    NotChainMap(String),
    #[error("path objects need chain complexes in non-negative levels")]
    NotNonNegative,
}
