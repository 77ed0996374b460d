pub mod catalog;
pub mod checkers;
pub mod constructions;
pub mod corep;
pub mod error;
pub mod exactlin;
pub mod hopfcore;
pub mod interchange;
pub mod report;
pub mod structure;

pub use error::{Error, Result};
pub use exactlin::{Field, Matrix, Scalar, Tensor3, Vector};
pub use hopfcore::{AlgebraSC, Character, CoalgebraSC, HopfSC};
pub use report::Report;

/// Largest dimension accepted for input objects.
pub const MAX_DIM: usize = 64;
/// Largest dimension of objects built internally (smash products and the like).
pub const MAX_DERIVED_DIM: usize = 256;
