//! Gradings, module algebras and transport of coactions.

use super::groups::{group_hopf, FiniteGroup};
use crate::corep::{basis_degrees, ComoduleAlgebraSC};
use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Tensor3};
use crate::hopfcore::{AlgebraSC, HopfSC};
use crate::report::Report;

/// An algebra graded by a finite group, one degree per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebraSpec {
    pub algebra: AlgebraSC,
    pub group: FiniteGroup,
    pub degrees: Vec<usize>,
}

impl GradedAlgebraSpec {
    pub fn new(
        algebra: AlgebraSC,
        group: FiniteGroup,
        degrees: Vec<usize>,
    ) -> Result<GradedAlgebraSpec> {
        let spec = GradedAlgebraSpec {
            algebra,
            group,
            degrees,
        };
        let report = spec.validate();
        if report.is_ok() {
            Ok(spec)
        } else {
            Err(Error::Invalid(format!("not a grading: {report}")))
        }
    }

    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let a = &self.algebra;
        if self.degrees.len() != a.dim() || self.degrees.iter().any(|&d| d >= self.group.order()) {
            report.push(
                "grading_shape",
                "one group element per basis element is required",
            );
            return report;
        }
        let g = &self.group;
        for (i, j, k, _) in a.mult().nonzeros() {
            if self.degrees[k] != g.mul(self.degrees[i], self.degrees[j]) {
                report.push(
                    "grading_multiplicative",
                    format!(
                        "{} {} has a component on {} of the wrong degree",
                        a.labels()[i],
                        a.labels()[j],
                        a.labels()[k]
                    ),
                );
            }
        }
        for (i, x) in a.unit().iter().enumerate() {
            if !x.is_zero() && self.degrees[i] != g.identity() {
                report.push(
                    "grading_unit",
                    format!("the unit has a component on {}", a.labels()[i]),
                );
            }
        }
        report
    }
}

/// `ρ(a_i) = a_i ⊗ deg(a_i)` over `kG`.
pub fn graded_to_comodule(spec: &GradedAlgebraSpec) -> Result<ComoduleAlgebraSC> {
    let report = spec.validate();
    if !report.is_ok() {
        return Err(Error::Invalid(format!("not a grading: {report}")));
    }
    let field = spec.algebra.field();
    let hopf = group_hopf(field, &spec.group);
    let n = spec.algebra.dim();
    let mut rho = Tensor3::zeros(field, (n, n, hopf.dim()));
    for (i, &d) in spec.degrees.iter().enumerate() {
        rho[(i, i, d)] = field.one();
    }
    ComoduleAlgebraSC::new(spec.algebra.clone(), hopf, rho)
}

/// Reads the grading back from a homogeneous coaction over `kG`.
pub fn grading_from_coaction(
    a: &ComoduleAlgebraSC,
    group: &FiniteGroup,
) -> Option<GradedAlgebraSpec> {
    if *a.hopf() != group_hopf(a.field(), group) {
        return None;
    }
    let degrees = basis_degrees(a)?;
    GradedAlgebraSpec::new(a.algebra().clone(), group.clone(), degrees).ok()
}

/// Checks that `act[k,i,j]` (coefficient of `a_j` in `h_k·a_i`) makes `A` a
/// left `H`-module algebra.
pub fn module_algebra_report(alg: &AlgebraSC, hopf: &HopfSC, act: &Tensor3) -> Report {
    let mut report = Report::new();
    let (n, m) = (alg.dim(), hopf.dim());
    if act.dims() != (m, n, n) {
        report.push(
            "action_shape",
            format!("expected {:?}, got {:?}", (m, n, n), act.dims()),
        );
        return report;
    }
    let field = alg.field();
    let mat = |h: &[crate::Scalar]| act.contract(0, h).expect("shape").transpose();
    let mats: Vec<Matrix> = (0..m).map(|k| mat(&hopf.basis_vector(k))).collect();
    for k in 0..m {
        for l in 0..m {
            let lhs = mat(hopf.algebra().basis_product(k, l));
            if lhs != mats[k].mul(&mats[l]).expect("square") {
                report.push(
                    "module",
                    format!(
                        "({} {})·a != {}·({}·a)",
                        hopf.labels()[k],
                        hopf.labels()[l],
                        hopf.labels()[k],
                        hopf.labels()[l]
                    ),
                );
            }
        }
    }
    if !mat(hopf.unit()).is_identity() {
        report.push("module", "1·a != a");
    }
    for k in 0..m {
        let d = hopf.coproduct(&hopf.basis_vector(k));
        for i in 0..n {
            for j in 0..n {
                let lhs = mats[k].mul_vec(alg.basis_product(i, j)).expect("square");
                let mut rhs = vector::zeros(field, n);
                for p in 0..m {
                    for q in 0..m {
                        let c = &d[(p, q)];
                        if !c.is_zero() {
                            let prod = alg.mul(&mats[p].column(i), &mats[q].column(j));
                            vector::axpy(&mut rhs, c, &prod);
                        }
                    }
                }
                if lhs != rhs {
                    report.push(
                        "module_algebra",
                        format!(
                            "{}·({} {}) != Σ ({}_1·{})({}_2·{})",
                            hopf.labels()[k],
                            alg.labels()[i],
                            alg.labels()[j],
                            hopf.labels()[k],
                            alg.labels()[i],
                            hopf.labels()[k],
                            alg.labels()[j]
                        ),
                    );
                }
            }
        }
        let on_one = mats[k].mul_vec(alg.unit()).expect("square");
        if on_one != vector::scale(&hopf.counit()[k], alg.unit()) {
            report.push(
                "module_algebra",
                format!("{}·1 != ε({})1", hopf.labels()[k], hopf.labels()[k]),
            );
        }
    }
    report
}

/// A left `H`-module algebra as a right `H^*`-comodule algebra:
/// `ρ(a) = Σ_k (h_k·a) ⊗ P_k`.
pub fn module_to_comodule(
    alg: &AlgebraSC,
    hopf: &HopfSC,
    act: &Tensor3,
) -> Result<ComoduleAlgebraSC> {
    let report = module_algebra_report(alg, hopf, act);
    if !report.is_ok() {
        return Err(Error::Invalid(format!("not a module algebra: {report}")));
    }
    let (n, m) = (alg.dim(), hopf.dim());
    let mut rho = Tensor3::zeros(alg.field(), (n, n, m));
    for (k, i, j, x) in act.nonzeros() {
        rho[(i, j, k)] = x.clone();
    }
    ComoduleAlgebraSC::new(alg.clone(), hopf.dual(), rho)
}

/// Re-expresses a coaction over `H1` as one over `H2` along a Hopf
/// isomorphism `iso: H2 → H1`: `ρ_2 = (id ⊗ iso^{-1}) ρ_1`.
pub fn transport_coaction(
    a: &ComoduleAlgebraSC,
    h2: &HopfSC,
    iso: &Matrix,
) -> Result<ComoduleAlgebraSC> {
    let report = h2.isomorphism_report(a.hopf(), iso);
    if !report.is_ok() {
        return Err(Error::Invalid(format!("not a Hopf isomorphism: {report}")));
    }
    let inv = iso.inverse().expect("checked invertible");
    let (n, m) = (a.dim(), h2.dim());
    let mut rho = Tensor3::zeros(a.field(), (n, n, m));
    for (i, j, k, x) in a.coaction().nonzeros() {
        for l in 0..m {
            let c = &inv[(l, k)];
            if !c.is_zero() {
                rho[(i, j, l)] += &(x * c);
            }
        }
    }
    ComoduleAlgebraSC::new(a.algebra().clone(), h2.clone(), rho)
}

/// The `H4`-action on `k[X]/(X²)`: `c·1 = 1`, `c·X = -X`, `x·1 = 0`, `x·X = 1`.
pub fn dual_numbers_h4_action(field: crate::Field) -> Tensor3 {
    let mut act = Tensor3::zeros(field, (4, 2, 2));
    let one = field.one();
    let minus = field.from_i64(-1);
    act[(0, 0, 0)] = one.clone();
    act[(0, 1, 1)] = one.clone();
    act[(1, 0, 0)] = one.clone();
    act[(1, 1, 1)] = minus;
    act[(2, 1, 0)] = one.clone();
    // cx·X = c·(x·X) = c·1 = 1
    act[(3, 1, 0)] = one;
    act
}
