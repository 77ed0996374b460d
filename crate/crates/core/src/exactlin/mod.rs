//! Exact field arithmetic and dense linear algebra.
//!
//! Everything above this module is phrased as rank conditions and identities
//! between structure tensors, so there is no floating point anywhere: scalars
//! are either canonical big rationals or residues modulo a prime.

mod matrix;
mod scalar;
mod tensor;
pub mod vector;

pub use matrix::Matrix;
pub use scalar::{Field, Scalar};
pub use tensor::Tensor3;

/// A column vector of scalars, all from one field.
pub type Vector = Vec<Scalar>;
