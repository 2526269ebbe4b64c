//! Exact linear algebra for the rest of the workspace: scalars over Q or F_p,
//! dense matrices, graded spaces, chain complexes and hom complexes.

pub mod complex;
pub mod error;
pub mod graded;
pub mod hom;
pub mod matrix;
pub mod random;
pub mod scalar;
pub mod vector;

pub use complex::{op_complex, truncate_nonneg, ChainComplex, ChainMap, Grading, HomologyBasis};
pub use error::CoreError;
pub use graded::{compose_graded, suspend, tensor_maps, GradedMap, GradedSpace};
pub use hom::{compose_hom, hom_complex, HomSpace};
pub use matrix::Matrix;
pub use scalar::{Field, Scalar};
pub use vector::Vector;
