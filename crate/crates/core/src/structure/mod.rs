//! Integrals, the distinguished grouplikes, unimodularity and sovereignty
//! flags, harpoon actions and the integral identity suite.

mod identities;
mod integrals;

pub use identities::{
    integral_identities_hold, verify_integral_identities, IdentityOutcome, IDENTITY_NAMES,
};
pub(crate) use integrals::theorem42_precondition_with;
pub use integrals::{
    check_theorem42_precondition, distinguished_pair, grouplike_inverse, integrals,
    is_cosemisimple, is_semisimple, is_sovereign_character, is_unimodular, sandwich,
    DistinguishedPair, IntegralSpace, Location, Side,
};

use crate::exactlin::{Scalar, Vector};
use crate::hopfcore::HopfSC;

/// The four actions of `H` and `H^*` on each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Harpoon {
    /// `h^* ⇀ h = Σ h^*(h_2) h_1`
    LeftOnH,
    /// `h ↼ h^* = Σ h^*(h_1) h_2`
    RightOnH,
    /// `(h ⇀ h^*)(k) = h^*(kh)`
    LeftOnDual,
    /// `(h^* ↼ h)(k) = h^*(hk)`
    RightOnDual,
}

/// Applies `actor` to `target`; for `LeftOnH`/`RightOnH` the actor is a
/// functional, otherwise an element of `H`.
pub fn harpoon(h: &HopfSC, kind: Harpoon, actor: &[Scalar], target: &[Scalar]) -> Vector {
    let n = h.dim();
    assert!(
        actor.len() == n && target.len() == n,
        "harpoon arguments must have Hopf dimension"
    );
    match kind {
        Harpoon::LeftOnH => h.coproduct(target).mul_vec(actor),
        Harpoon::RightOnH => h.coproduct(target).vec_mul(actor),
        Harpoon::LeftOnDual => h.algebra().right_mul_matrix(actor).vec_mul(target),
        Harpoon::RightOnDual => h.algebra().left_mul_matrix(actor).vec_mul(target),
    }
    .expect("square")
}

#[cfg(test)]
mod tests;
