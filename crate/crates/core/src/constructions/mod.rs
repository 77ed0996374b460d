//! Concrete Hopf algebras, comodule algebras and derived constructions.

mod comodules;
mod examples;
mod groups;
mod pointed;
mod small;
mod smash;
mod trivext;

pub use comodules::{
    dual_numbers_h4_action, graded_to_comodule, grading_from_coaction, module_algebra_report,
    module_to_comodule, transport_coaction, GradedAlgebraSpec,
};
pub use examples::{
    graded_upper_triangular_extension, h4_dual_numbers, h4_dual_numbers_extension,
    h4_dual_numbers_extension_over_h4, super_trivext, ungraded_trivext,
};
pub use groups::{group_algebra, group_hopf, FiniteGroup};
pub use pointed::{h4_self_duality, sweedler_h4, taft_algebra};
pub use small::{dual_numbers, ground_field, split_pair, upper_triangular};
pub use smash::{coinvariants, corner, smash_element, smash_index, smash_product};
pub use trivext::{trivial_extension, TrivialExtension};
