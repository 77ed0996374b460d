//! Worked comodule algebras: over `H4` and its dual, and graded trivial extensions.

use super::comodules::{
    dual_numbers_h4_action, graded_to_comodule, module_to_comodule, transport_coaction,
    GradedAlgebraSpec,
};
use super::groups::FiniteGroup;
use super::pointed::{h4_self_duality, sweedler_h4};
use super::small::{dual_numbers, upper_triangular};
use super::trivext::{trivial_extension, TrivialExtension};
use crate::corep::ComoduleAlgebraSC;
use crate::error::Result;
use crate::exactlin::{vector, Field};
use crate::hopfcore::{AlgebraSC, HopfSC};

/// `k[X]/(X²)` as a right `H4^*`-comodule algebra, from its `H4`-module structure.
pub fn h4_dual_numbers(field: Field) -> Result<ComoduleAlgebraSC> {
    let h = sweedler_h4(field)?;
    module_to_comodule(&dual_numbers(field), &h, &dual_numbers_h4_action(field))
}

/// `E(A)` for `A = k[X]/(X²)` over `H4^*` with `u = ev_c`.
pub fn h4_dual_numbers_extension(field: Field) -> Result<TrivialExtension> {
    let a = h4_dual_numbers(field)?;
    trivial_extension(&a, &vector::unit(field, 4, 1))
}

/// The same extension with its coaction carried to `H4` along the self-duality.
pub fn h4_dual_numbers_extension_over_h4(field: Field) -> Result<TrivialExtension> {
    let ext = h4_dual_numbers_extension(field)?;
    let h = sweedler_h4(field)?;
    let algebra = transport_coaction(&ext.algebra, &h, &h4_self_duality(field))?;
    Ok(TrivialExtension {
        algebra,
        witness: ext.witness,
    })
}

/// The classical trivial extension `R ⊕ R^*` graded by `C2` with `A_e = R`,
/// `A_g = R^*`.
pub fn super_trivext(r: &AlgebraSC) -> Result<GradedAlgebraSpec> {
    let n = r.dim();
    let plain = ComoduleAlgebraSC::trivial(r.clone(), HopfSC::trivial(r.field()));
    let ext = trivial_extension(&plain, &[r.field().one()])?;
    let degrees = std::iter::repeat_n(0, n)
        .chain(std::iter::repeat_n(1, n))
        .collect();
    GradedAlgebraSpec::new(
        ext.algebra.algebra().clone(),
        FiniteGroup::cyclic(2),
        degrees,
    )
}

/// `R ⊕ R^*` with the trivial grading: the algebra of [`super_trivext`], all in degree `e`.
pub fn ungraded_trivext(r: &AlgebraSC) -> Result<GradedAlgebraSpec> {
    let spec = super_trivext(r)?;
    let n = spec.degrees.len();
    GradedAlgebraSpec::new(spec.algebra, spec.group, vec![0; n])
}

/// `E(R)` over `kC2` with `u = ε`, where `R` is upper triangular with
/// `deg E12 = g` and `E11`, `E22` in degree `e`.
pub fn graded_upper_triangular_extension(field: Field) -> Result<TrivialExtension> {
    let spec = GradedAlgebraSpec::new(
        upper_triangular(field),
        FiniteGroup::cyclic(2),
        vec![0, 1, 0],
    )?;
    let r = graded_to_comodule(&spec)?;
    let eps = r.hopf().counit().to_vec();
    trivial_extension(&r, &eps)
}
