use serde::Serialize;

use super::engine::{decide, decide_pencil, CheckReport, DecideOptions, Verdict};
use super::spaces::{
    colinear_constraints, colinear_space, gram, largest_stable_in_common_kernel,
    largest_stable_subspace_in_kernel, plain, symmetric_constraints, Stability,
};
use crate::constructions::{coinvariants, TrivialExtension};
use crate::corep::{twist_iso, ComoduleAlgebraSC};
use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Scalar, Vector};
use crate::hopfcore::{AlgebraSC, HopfSC};
use crate::report::Report;
use crate::structure::{is_cosemisimple, is_unimodular};

const INCONSISTENT: &str = "inconsistent";

impl CheckReport {
    /// False when an internal cross-check disagreed with the verdict.
    pub fn is_consistent(&self) -> bool {
        !self.diagnostics.iter().any(|d| d.starts_with(INCONSISTENT))
    }
}

fn describe(space: &[Vector], labels: &[String]) -> String {
    let parts: Vec<String> = space
        .iter()
        .map(|v| vector::display_in_basis(v, labels))
        .collect();
    format!("span{{{}}}", parts.join(", "))
}

fn stabilizer_diagnostics(
    a: &ComoduleAlgebraSC,
    w: &[Scalar],
    sides: &[(Stability, &str)],
    out: &mut Vec<String>,
) {
    for (sel, what) in sides {
        let v = largest_stable_subspace_in_kernel(a, w, *sel);
        if v.is_empty() {
            out.push(format!("Ker λ contains no nonzero {what}"));
        } else {
            out.push(format!(
                "{INCONSISTENT}: Ker λ contains the {what} {} although the Gram matrix is invertible",
                describe(&v, a.labels())
            ));
        }
    }
}

/// Frobenius in `M^H`: a colinear `λ` with nondegenerate `λ(ab)`.
pub fn check_frobenius_in_mh(a: &ComoduleAlgebraSC, opts: &DecideOptions) -> CheckReport {
    let space = colinear_space(a);
    let mut report = decide(a.algebra(), &space, opts);
    match report.witness.clone() {
        Some(w) => {
            if colinear_constraints(a)
                .mul_vec(&w)
                .expect("shape")
                .iter()
                .all(Scalar::is_zero)
            {
                report
                    .diagnostics
                    .push("witness colinearity verified by substitution".into());
            } else {
                report
                    .diagnostics
                    .push(format!("{INCONSISTENT}: witness is not colinear"));
            }
            stabilizer_diagnostics(
                a,
                &w,
                &[
                    (Stability::RIGHT, "right ideal"),
                    (Stability::RIGHT_COMODULE, "subobject in M^H_A"),
                    (Stability::LEFT_COMODULE, "subobject in _A M^H"),
                ],
                &mut report.diagnostics,
            );
        }
        None => {
            let common = largest_stable_in_common_kernel(a, &space, Stability::RIGHT_COMODULE);
            if !common.is_empty() {
                report.diagnostics.push(format!(
                    "every colinear functional kills the subobject {}",
                    describe(&common, a.labels())
                ));
            }
        }
    }
    report
}

/// Form identities of a symmetric witness with `B(a,b) = λ(ba)`:
/// `B(b,ca) = B(b f(c),a)`, `B(b,ac) = B(cb,a)`, `B(b,a) = B(f(a),b)` and
/// `B(b,h^*·a) = B((h^*S)·b,a)`, all on basis elements.
pub fn symmetric_form_report(a: &ComoduleAlgebraSC, f: &Matrix, lambda: &[Scalar]) -> Report {
    let alg = a.algebra();
    let n = a.dim();
    let b = |x: &[Scalar], y: &[Scalar]| vector::dot(&alg.mul(y, x), lambda);
    let e: Vec<Vector> = (0..n).map(|i| alg.basis_vector(i)).collect();
    let fe: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            if b(&e[i], &e[j]) != b(&fe[j], &e[i]) {
                report.push(
                    "B3",
                    format!(
                        "B({0},{1}) != B(f({1}),{0})",
                        alg.labels()[i],
                        alg.labels()[j]
                    ),
                );
            }
            for k in 0..n {
                let ca = alg.basis_product(k, j);
                if b(&e[i], ca) != b(&alg.mul(&e[i], &fe[k]), &e[j]) {
                    report.push(
                        "B1",
                        format!(
                            "at ({}, {}, {})",
                            alg.labels()[i],
                            alg.labels()[k],
                            alg.labels()[j]
                        ),
                    );
                }
                let ac = alg.basis_product(j, k);
                if b(&e[i], ac) != b(alg.basis_product(k, i), &e[j]) {
                    report.push(
                        "B2",
                        format!(
                            "at ({}, {}, {})",
                            alg.labels()[i],
                            alg.labels()[j],
                            alg.labels()[k]
                        ),
                    );
                }
            }
        }
    }
    let h = a.hopf();
    let s = h.antipode();
    for k in 0..h.dim() {
        let hstar = h.basis_vector(k);
        let act = a.action_matrix(&hstar);
        let act_s = a.action_matrix(&s.vec_mul(&hstar).expect("square"));
        for i in 0..n {
            for j in 0..n {
                if b(&e[i], &act.column(j)) != b(&act_s.column(i), &e[j]) {
                    report.push(
                        "colinear_form",
                        format!(
                            "at ({}, {}, {})",
                            alg.labels()[i],
                            h.labels()[k],
                            alg.labels()[j]
                        ),
                    );
                }
            }
        }
    }
    report
}

/// `(H,u)`-symmetric: a colinear `λ` with `λ(ba) = λ(a f(b))` and
/// nondegenerate Gram matrix.
pub fn check_symmetric(
    a: &ComoduleAlgebraSC,
    u: &[Scalar],
    opts: &DecideOptions,
) -> Result<CheckReport> {
    let constraints = symmetric_constraints(a, u)?;
    let space = constraints.kernel();
    let mut report = decide(a.algebra(), &space, opts);
    match report.witness.clone() {
        Some(w) => {
            if constraints
                .mul_vec(&w)
                .expect("shape")
                .iter()
                .all(Scalar::is_zero)
            {
                report
                    .diagnostics
                    .push("witness constraints verified by substitution".into());
            } else {
                report
                    .diagnostics
                    .push(format!("{INCONSISTENT}: witness violates the constraints"));
            }
            let f = twist_iso(a, u)?;
            let forms = symmetric_form_report(a, &f, &w);
            if forms.is_ok() {
                report
                    .diagnostics
                    .push("B1, B2, B3 and the colinear form identity hold".into());
            } else {
                report
                    .diagnostics
                    .push(format!("{INCONSISTENT}: form identities fail: {forms}"));
            }
            stabilizer_diagnostics(
                a,
                &w,
                &[
                    (Stability::RIGHT, "right ideal"),
                    (Stability::LEFT, "left ideal"),
                    (Stability::RIGHT_COMODULE, "subobject in M^H_A"),
                    (Stability::LEFT_COMODULE, "subobject in _A M^H"),
                ],
                &mut report.diagnostics,
            );
        }
        None => {
            let common = largest_stable_in_common_kernel(a, &space, Stability::TWO_SIDED);
            if !common.is_empty() && !space.is_empty() {
                report.diagnostics.push(format!(
                    "every admissible functional kills the two-sided ideal {}",
                    describe(&common, a.labels())
                ));
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlainKind {
    Frobenius,
    Symmetric,
}

/// Classical Frobenius / symmetric tests (trivial Hopf algebra, `u = ε`).
pub fn check_plain(alg: &AlgebraSC, kind: PlainKind, opts: &DecideOptions) -> CheckReport {
    let a = plain(alg);
    match kind {
        PlainKind::Frobenius => check_frobenius_in_mh(&a, opts),
        PlainKind::Symmetric => check_symmetric(&a, &[alg.field().one()], opts)
            .expect("ε is sovereign for the trivial Hopf algebra"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfSymmetry {
    pub unimodular: bool,
    pub s2_inner: Verdict,
    /// An invertible `a` with `S²(h) a = a h`.
    pub s2_inner_witness: Option<Vector>,
    /// Unimodular and `S²` inner.
    pub symmetric: bool,
    pub plain_symmetric: Verdict,
    pub agrees: bool,
}

/// Unimodularity plus innerness of `S²`, compared with the direct test.
pub fn hopf_symmetric_crosscheck(h: &HopfSC, opts: &DecideOptions) -> Result<HopfSymmetry> {
    let unimodular = is_unimodular(h)?;
    let alg = h.algebra();
    let n = h.dim();
    let s2 = h.antipode_square();
    let mut sys = Matrix::empty_rows(h.field(), n);
    for i in 0..n {
        let e = alg.basis_vector(i);
        let lhs = alg.left_mul_matrix(&s2.column(i));
        let rhs = alg.right_mul_matrix(&e);
        sys = sys.vstack(&lhs.sub(&rhs).expect("square")).expect("width");
    }
    let space = sys.kernel();
    let mats: Vec<Matrix> = space.iter().map(|a| alg.left_mul_matrix(a)).collect();
    let pencil = decide_pencil(h.field(), &mats, opts);
    let s2_inner_witness = pencil.combination.map(|c| {
        let mut w = vector::zeros(h.field(), n);
        for (v, x) in space.iter().zip(&c) {
            vector::axpy(&mut w, x, v);
        }
        vector::normalize_leading(&w)
    });
    let symmetric = unimodular && pencil.verdict.is_yes();
    let plain_symmetric = check_plain(alg, PlainKind::Symmetric, opts).verdict;
    Ok(HopfSymmetry {
        unimodular,
        s2_inner: pencil.verdict,
        s2_inner_witness,
        symmetric,
        plain_symmetric,
        agrees: symmetric == plain_symmetric.is_yes(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoinvariantsTransfer {
    pub coinvariants_dim: usize,
    pub frobenius_in_mh: Verdict,
    pub coinvariants_frobenius: Option<Verdict>,
    pub symmetric_in_mh: Option<Verdict>,
    pub coinvariants_symmetric: Option<Verdict>,
    /// Every implication whose hypothesis held was confirmed.
    pub holds: bool,
}

/// Frobenius in `M^H` passes to `A^{coH}` over cosemisimple `H`; with `H`
/// involutory, `(H,ε)`-symmetry passes to plain symmetry of `A^{coH}`.
pub fn check_coinvariants_transfer(
    a: &ComoduleAlgebraSC,
    opts: &DecideOptions,
) -> Result<CoinvariantsTransfer> {
    let h = a.hopf();
    if !is_cosemisimple(h)? {
        return Err(Error::Precondition(
            "the Hopf algebra is not cosemisimple".into(),
        ));
    }
    let (co, _) = coinvariants(a)?;
    let frobenius_in_mh = check_frobenius_in_mh(a, opts).verdict;
    let mut holds = true;
    let coinvariants_frobenius = frobenius_in_mh.is_yes().then(|| {
        let v = check_plain(&co, PlainKind::Frobenius, opts).verdict;
        holds &= v.is_yes();
        v
    });
    let (mut symmetric_in_mh, mut coinvariants_symmetric) = (None, None);
    if h.is_involutory() {
        let v = check_symmetric(a, h.counit(), opts)?.verdict;
        symmetric_in_mh = Some(v);
        if v.is_yes() {
            let c = check_plain(&co, PlainKind::Symmetric, opts).verdict;
            holds &= c.is_yes();
            coinvariants_symmetric = Some(c);
        }
    }
    Ok(CoinvariantsTransfer {
        coinvariants_dim: co.dim(),
        frobenius_in_mh,
        coinvariants_frobenius,
        symmetric_in_mh,
        coinvariants_symmetric,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub in_space: bool,
    pub nondegenerate: bool,
}

impl WitnessCheck {
    pub fn holds(&self) -> bool {
        self.in_space && self.nondegenerate
    }
}

/// The canonical functional `λ(a, a^*) = a^*(1)` of a trivial extension.
pub fn verify_canonical_witness(ext: &TrivialExtension, u: &[Scalar]) -> Result<WitnessCheck> {
    let c = symmetric_constraints(&ext.algebra, u)?;
    Ok(WitnessCheck {
        in_space: c
            .mul_vec(&ext.witness)
            .expect("shape")
            .iter()
            .all(Scalar::is_zero),
        nondegenerate: gram(ext.algebra.algebra(), &ext.witness).is_nondegenerate(),
    })
}
