use super::comodule::{fiber_nonzeros, ComoduleAlgebraSC};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Tensor3};
use crate::hopfcore::outer;
use crate::report::Report;
use crate::structure::is_sovereign_character;

/// The right `H`-comodule `A^*`: `p_j ↦ Σ_i p_j(a_{i,0}) p_i ⊗ S(a_{i,1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualComodule {
    /// `ρ^*(p_j) = Σ coaction[j,i,l] p_i ⊗ h_l`.
    pub coaction: Tensor3,
    /// Whether `(h^*·a^*)(a) = a^*((h^* S)·a)` held on all basis triples.
    pub eq1_holds: bool,
}

pub fn dual_coaction(a: &ComoduleAlgebraSC) -> Tensor3 {
    let (n, m) = (a.dim(), a.hopf().dim());
    let s = a.hopf().antipode();
    let mut t = Tensor3::zeros(a.field(), (n, n, m));
    for (i, j, k, x) in a.coaction().nonzeros() {
        for l in 0..m {
            let slk = &s[(l, k)];
            if !slk.is_zero() {
                t[(j, i, l)] += &(x * slk);
            }
        }
    }
    t
}

/// Builds the dual coaction and checks the duality between the two `H^*`-actions.
pub fn dual_comodule(a: &ComoduleAlgebraSC) -> DualComodule {
    let coaction = dual_coaction(a);
    let (n, m) = (a.dim(), a.hopf().dim());
    let s = a.hopf().antipode();
    let mut eq1_holds = true;
    for k in 0..m {
        let hstar = a.hopf().basis_vector(k);
        // matrix of a^* ↦ h^*·a^* on A^*
        let on_dual = coaction.contract(2, &hstar).expect("shape").transpose();
        // matrix of a ↦ (h^* S)·a on A
        let on_a = a.action_matrix(&s.vec_mul(&hstar).expect("square"));
        for j in 0..n {
            for i in 0..n {
                // (h^*·p_j)(a_i) vs p_j((h^*S)·a_i)
                if on_dual[(i, j)] != on_a[(j, i)] {
                    eq1_holds = false;
                }
            }
        }
    }
    DualComodule {
        coaction,
        eq1_holds,
    }
}

/// `A^{(S²)}`: the same algebra with coaction `a ↦ Σ a_0 ⊗ S²(a_1)`.
pub fn shift_s2(a: &ComoduleAlgebraSC) -> ComoduleAlgebraSC {
    let (n, m) = (a.dim(), a.hopf().dim());
    let s2 = a.hopf().antipode_square();
    let mut t = Tensor3::zeros(a.field(), (n, n, m));
    for (i, j, k, x) in a.coaction().nonzeros() {
        for l in 0..m {
            let c = &s2[(l, k)];
            if !c.is_zero() {
                t[(i, j, l)] += &(x * c);
            }
        }
    }
    a.with_coaction(t).expect("shape preserved")
}

/// The twist `f(a) = u^{-1}·a = Σ u^{-1}(a_1) a_0`, verified to be an
/// invertible algebra map that is colinear `A → A^{(S²)}`.
pub fn twist_iso(a: &ComoduleAlgebraSC, u: &[Scalar]) -> Result<Matrix> {
    let h = a.hopf();
    if !is_sovereign_character(h, u) {
        return Err(Error::NotSovereign(format!(
            "({}) does not implement S² by conjugation",
            u.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    let f = a.action_matrix(&h.character_inverse(u));
    let report = twist_report(a, &f);
    if !report.is_ok() {
        return Err(Error::Invalid(format!(
            "twist map failed verification: {report}"
        )));
    }
    Ok(f)
}

pub(crate) fn twist_report(a: &ComoduleAlgebraSC, f: &Matrix) -> Report {
    let mut report = Report::new();
    let alg = a.algebra();
    let n = a.dim();
    if !f.is_invertible() {
        report.push("twist_invertible", "f is singular");
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = f.mul_vec(alg.basis_product(i, j)).expect("square");
            if lhs != alg.mul(&f.column(i), &f.column(j)) {
                report.push(
                    "twist_multiplicative",
                    format!("at ({}, {})", alg.labels()[i], alg.labels()[j]),
                );
            }
        }
    }
    if f.mul_vec(alg.unit()).expect("square") != alg.unit() {
        report.push("twist_unit", "f(1) != 1");
    }
    let shifted = shift_s2(a);
    for i in 0..n {
        let lhs = shifted.coact(&f.column(i));
        let rhs = f.mul(&a.coact(&alg.basis_vector(i))).expect("shape");
        if lhs != rhs {
            report.push(
                "twist_colinear",
                format!("ρ'(f({0})) != (f⊗id)ρ({0})", alg.labels()[i]),
            );
        }
    }
    report
}

/// A finite-dimensional `H`-comodule with optional left and right actions of
/// comodule algebras, checked against the Doi–Hopf compatibilities.
///
/// `left[i,j,l]` is the coefficient of `m_l` in `a_i·m_j`; `right[j,i,l]` the
/// coefficient of `m_l` in `m_j·b_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoiHopfModuleSC {
    pub labels: Vec<String>,
    pub coaction: Tensor3,
    pub left: Option<(ComoduleAlgebraSC, Tensor3)>,
    pub right: Option<(ComoduleAlgebraSC, Tensor3)>,
}

impl DoiHopfModuleSC {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn field(&self) -> Field {
        self.coaction.field()
    }

    /// Matrix of `m ↦ a_i·m`.
    pub fn left_matrix(&self, i: usize) -> Option<Matrix> {
        self.left.as_ref().map(|(_, t)| t.slice(i).transpose())
    }

    /// Matrix of `m ↦ m·b_i`.
    pub fn right_matrix(&self, i: usize) -> Option<Matrix> {
        self.right.as_ref().map(|(_, t)| {
            let n = self.dim();
            let mut m = Matrix::zeros(self.field(), n, n);
            for j in 0..n {
                for l in 0..n {
                    m[(l, j)] = t[(j, i, l)].clone();
                }
            }
            m
        })
    }

    fn coact(&self, v: &[Scalar]) -> Matrix {
        self.coaction.apply_first(v)
    }

    /// Module axioms, the bimodule law, the comodule axioms and the
    /// colinearity of each action.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let n = self.dim();
        let field = self.field();
        let left_mats: Option<Vec<Matrix>> = self.left.as_ref().map(|(a, _)| {
            (0..a.dim())
                .map(|i| self.left_matrix(i).expect("present"))
                .collect()
        });
        let right_mats: Option<Vec<Matrix>> = self.right.as_ref().map(|(a, _)| {
            (0..a.dim())
                .map(|i| self.right_matrix(i).expect("present"))
                .collect()
        });
        let combine = |mats: &[Matrix], v: &[Scalar]| -> Matrix {
            let mut out = Matrix::zeros(field, n, n);
            for (m, c) in mats.iter().zip(v) {
                if !c.is_zero() {
                    out = out.add(&m.scale(c)).expect("square");
                }
            }
            out
        };
        if let (Some((a, _)), Some(ls)) = (&self.left, &left_mats) {
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let lhs = combine(ls, a.algebra().basis_product(i, j));
                    if lhs != ls[i].mul(&ls[j]).expect("square") {
                        report.push("left_module", format!("(a_{i} a_{j})·m != a_{i}·(a_{j}·m)"));
                    }
                }
            }
            if !combine(ls, a.algebra().unit()).is_identity() {
                report.push("left_module", "1·m != m");
            }
        }
        if let (Some((b, _)), Some(rs)) = (&self.right, &right_mats) {
            for i in 0..b.dim() {
                for j in 0..b.dim() {
                    let lhs = combine(rs, b.algebra().basis_product(i, j));
                    if lhs != rs[j].mul(&rs[i]).expect("square") {
                        report.push(
                            "right_module",
                            format!("m·(b_{i} b_{j}) != (m·b_{i})·b_{j}"),
                        );
                    }
                }
            }
            if !combine(rs, b.algebra().unit()).is_identity() {
                report.push("right_module", "m·1 != m");
            }
        }
        if let (Some(ls), Some(rs)) = (&left_mats, &right_mats) {
            for (i, l) in ls.iter().enumerate() {
                for (j, r) in rs.iter().enumerate() {
                    if l.mul(r).expect("square") != r.mul(l).expect("square") {
                        report.push("bimodule", format!("(a_{i}·m)·b_{j} != a_{i}·(m·b_{j})"));
                    }
                }
            }
        }

        // comodule axioms via a comodule algebra sharing the Hopf algebra
        let hopf = match (&self.left, &self.right) {
            (Some((a, _)), _) | (None, Some((a, _))) => a.hopf().clone(),
            (None, None) => return report,
        };
        let m = hopf.dim();
        for i in 0..n {
            let mut lhs = vec![field.zero(); n * m * m];
            let mut rhs = lhs.clone();
            for (j, k, x) in fiber_nonzeros(&self.coaction, i) {
                for (j2, k2, y) in fiber_nonzeros(&self.coaction, j) {
                    lhs[j2 * m * m + k2 * m + k] += &(x * y);
                }
                for (k1, k2, y) in fiber_nonzeros(hopf.coalgebra().comult(), k) {
                    rhs[j * m * m + k1 * m + k2] += &(x * y);
                }
            }
            if lhs != rhs {
                report.push(
                    "comodule",
                    format!("coassociativity fails on {}", self.labels[i]),
                );
            }
            let e = crate::exactlin::vector::unit(field, n, i);
            if self.coact(&e).mul_vec(hopf.counit()).expect("shape") != e {
                report.push(
                    "comodule",
                    format!("counit law fails on {}", self.labels[i]),
                );
            }
        }

        // ρ(a·m) = Σ a_0·m_0 ⊗ a_1 m_1 and ρ(m·b) = Σ m_0·b_0 ⊗ m_1 b_1
        if let (Some((a, _)), Some(ls)) = (&self.left, &left_mats) {
            for i in 0..a.dim() {
                let ra = a.coact(&a.algebra().basis_vector(i));
                for j in 0..n {
                    let mj = crate::exactlin::vector::unit(field, n, j);
                    let lhs = self.coact(&ls[i].mul_vec(&mj).expect("square"));
                    let rm = self.coact(&mj);
                    let rhs = act_tensor(&hopf, ls, &ra, &rm, true);
                    if lhs != rhs {
                        report.push(
                            "left_colinear",
                            format!(
                                "ρ({}·{}) != Σ a_0·m_0 ⊗ a_1 m_1",
                                a.labels()[i],
                                self.labels[j]
                            ),
                        );
                    }
                }
            }
        }
        if let (Some((b, _)), Some(rs)) = (&self.right, &right_mats) {
            for i in 0..b.dim() {
                let rb = b.coact(&b.algebra().basis_vector(i));
                for j in 0..n {
                    let mj = crate::exactlin::vector::unit(field, n, j);
                    let lhs = self.coact(&rs[i].mul_vec(&mj).expect("square"));
                    let rm = self.coact(&mj);
                    let rhs = act_tensor(&hopf, rs, &rb, &rm, false);
                    if lhs != rhs {
                        report.push(
                            "right_colinear",
                            format!(
                                "ρ({}·{}) != Σ m_0·b_0 ⊗ m_1 b_1",
                                self.labels[j],
                                b.labels()[i]
                            ),
                        );
                    }
                }
            }
        }
        report
    }
}

/// `Σ (a_p acting on m_q) ⊗ h` from coefficient matrices `ra` (algebra ⊗ H)
/// and `rm` (module ⊗ H); `left` selects `a_1 m_1` versus `m_1 b_1` in `H`.
fn act_tensor(
    hopf: &crate::hopfcore::HopfSC,
    mats: &[Matrix],
    ra: &Matrix,
    rm: &Matrix,
    left: bool,
) -> Matrix {
    let n = rm.rows();
    let m = hopf.dim();
    let mut out = Matrix::zeros(hopf.field(), n, m);
    for p in 0..ra.rows() {
        for k in 0..m {
            let x = &ra[(p, k)];
            if x.is_zero() {
                continue;
            }
            for q in 0..n {
                for l in 0..m {
                    let y = &rm[(q, l)];
                    if y.is_zero() {
                        continue;
                    }
                    let c = x * y;
                    let acted = mats[p].column(q);
                    let hprod = if left {
                        hopf.algebra().basis_product(k, l)
                    } else {
                        hopf.algebra().basis_product(l, k)
                    };
                    let contrib = outer(&acted, hprod);
                    out = out.add(&contrib.scale(&c)).expect("shape");
                }
            }
        }
    }
    out
}

/// `F(A^*)`: `A^*` with the dual coaction, right action `(a^*·b)(x) = a^*(bx)`
/// and left action `(a ∗ a^*)(x) = a^*(x f(a))` twisted by `f = u^{-1}·-`.
pub fn f_twisted_dual(a: &ComoduleAlgebraSC, u: &[Scalar]) -> Result<DoiHopfModuleSC> {
    let f = twist_iso(a, u)?;
    Ok(dual_module_with_left_twist(a, &f, a.clone()))
}

/// `A^*` with the left action precomposed by `f` and declared over `left_alg`
/// (used with `f = id` to probe the untwisted structure).
pub fn dual_module_with_left_twist(
    a: &ComoduleAlgebraSC,
    f: &Matrix,
    left_alg: ComoduleAlgebraSC,
) -> DoiHopfModuleSC {
    let n = a.dim();
    let field = a.field();
    let mult = a.algebra().mult();
    let mut left = Tensor3::zeros(field, (n, n, n));
    let mut right = Tensor3::zeros(field, (n, n, n));
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                // (a_i ∗ p_j)(a_l) = p_j(a_l f(a_i))
                let mut acc = field.zero();
                for r in 0..n {
                    let c = &f[(r, i)];
                    if !c.is_zero() {
                        acc += &(c * &mult[(l, r, j)]);
                    }
                }
                left[(i, j, l)] = acc;
                // (p_j·a_i)(a_l) = p_j(a_i a_l)
                right[(j, i, l)] = mult[(i, l, j)].clone();
            }
        }
    }
    DoiHopfModuleSC {
        labels: a.labels().iter().map(|l| format!("p_{l}")).collect(),
        coaction: dual_coaction(a),
        left: Some((left_alg, left)),
        right: Some((a.clone(), right)),
    }
}

/// Compatibility report for `A^*` with the untwisted left action against the
/// coaction of `A` itself; failures show that the twist is needed.
pub fn untwisted_dual_diagnostic(a: &ComoduleAlgebraSC) -> Report {
    let id = Matrix::identity(a.field(), a.dim());
    dual_module_with_left_twist(a, &id, a.clone()).validate()
}
