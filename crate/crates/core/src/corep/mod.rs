//! Right comodule algebras, the induced `H^*`-action, the dual comodule,
//! the `S²`-shift, the twist `f` and the bimodule-with-coaction `F(A^*)`.

mod comodule;
mod dual;

pub use comodule::{basis_degrees, tensor_mul, ComoduleAlgebraSC};
pub use dual::{
    dual_coaction, dual_comodule, dual_module_with_left_twist, f_twisted_dual, shift_s2, twist_iso,
    untwisted_dual_diagnostic, DoiHopfModuleSC, DualComodule,
};
