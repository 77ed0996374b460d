//! Algebras, coalgebras and Hopf algebras as dense structure constants,
//! with exhaustive axiom validation, duals and characters.

mod algebra;
mod coalgebra;
mod hopf;

pub use algebra::AlgebraSC;
pub use coalgebra::CoalgebraSC;
pub use hopf::{outer, HopfSC};

use crate::error::{Error, Result};
use crate::exactlin::{Scalar, Vector};

/// An algebra map `H → k`, stored by its values on the basis of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    coords: Vector,
}

impl Character {
    pub fn new(h: &HopfSC, coords: Vector) -> Result<Character> {
        if h.verify_character(&coords) {
            Ok(Character { coords })
        } else {
            Err(Error::Invalid(format!(
                "({}) is not a character",
                coords
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            )))
        }
    }

    /// The counit, which is always a character.
    pub fn counit(h: &HopfSC) -> Character {
        Character {
            coords: h.counit().to_vec(),
        }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// The convolution inverse `u ∘ S`.
    pub fn inverse(&self, h: &HopfSC) -> Character {
        Character {
            coords: h.character_inverse(&self.coords),
        }
    }

    pub fn is_counit(&self, h: &HopfSC) -> bool {
        self.coords == h.counit()
    }
}
