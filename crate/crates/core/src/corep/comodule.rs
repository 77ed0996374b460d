use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Tensor3, Vector};
use crate::hopfcore::{AlgebraSC, HopfSC};
use crate::report::Report;

/// A right `H`-comodule algebra: `ρ(a_i) = Σ_{j,k} coaction[i,j,k] a_j ⊗ h_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebraSC {
    alg: AlgebraSC,
    hopf: HopfSC,
    coaction: Tensor3,
}

impl ComoduleAlgebraSC {
    pub fn new(alg: AlgebraSC, hopf: HopfSC, coaction: Tensor3) -> Result<ComoduleAlgebraSC> {
        let (n, m) = (alg.dim(), hopf.dim());
        if coaction.dims() != (n, n, m) {
            return Err(Error::DimensionMismatch(format!(
                "coaction {:?} for an algebra of dimension {n} over a Hopf algebra of dimension {m}",
                coaction.dims()
            )));
        }
        if alg.field() != hopf.field() || coaction.field() != alg.field() {
            return Err(Error::FieldMismatch(
                alg.field().to_string(),
                hopf.field().to_string(),
            ));
        }
        Ok(ComoduleAlgebraSC {
            alg,
            hopf,
            coaction,
        })
    }

    /// `ρ(a) = a ⊗ 1`.
    pub fn trivial(alg: AlgebraSC, hopf: HopfSC) -> ComoduleAlgebraSC {
        let (n, m) = (alg.dim(), hopf.dim());
        let mut rho = Tensor3::zeros(alg.field(), (n, n, m));
        for i in 0..n {
            for k in 0..m {
                rho[(i, i, k)] = hopf.unit()[k].clone();
            }
        }
        ComoduleAlgebraSC::new(alg, hopf, rho).expect("shapes agree")
    }

    /// `H` over itself with `ρ = Δ`.
    pub fn regular(hopf: &HopfSC) -> ComoduleAlgebraSC {
        ComoduleAlgebraSC::new(
            hopf.algebra().clone(),
            hopf.clone(),
            hopf.coalgebra().comult().clone(),
        )
        .expect("shapes agree")
    }

    pub fn algebra(&self) -> &AlgebraSC {
        &self.alg
    }

    pub fn hopf(&self) -> &HopfSC {
        &self.hopf
    }

    pub fn coaction(&self) -> &Tensor3 {
        &self.coaction
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn labels(&self) -> &[String] {
        self.alg.labels()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> ComoduleAlgebraSC {
        self.alg = self.alg.with_labels(labels);
        self
    }

    /// Same algebra and Hopf algebra, different coaction tensor.
    pub fn with_coaction(&self, coaction: Tensor3) -> Result<ComoduleAlgebraSC> {
        ComoduleAlgebraSC::new(self.alg.clone(), self.hopf.clone(), coaction)
    }

    /// `ρ(v)` as an `n × m` coefficient matrix.
    pub fn coact(&self, v: &[Scalar]) -> Matrix {
        self.coaction.apply_first(v)
    }

    /// Matrix of `a ↦ h^*·a = Σ h^*(a_1) a_0`.
    pub fn action_matrix(&self, hstar: &[Scalar]) -> Matrix {
        self.coaction
            .contract(2, hstar)
            .expect("functional has Hopf dimension")
            .transpose()
    }

    pub fn act(&self, hstar: &[Scalar], a: &[Scalar]) -> Vector {
        self.action_matrix(hstar)
            .mul_vec(a)
            .expect("element has algebra dimension")
    }

    /// The left `H^*`-action as a tensor: `P_k·a_i = Σ_j act[k,i,j] a_j`.
    pub fn hstar_action(&self) -> Tensor3 {
        let (n, m) = (self.dim(), self.hopf.dim());
        let mut t = Tensor3::zeros(self.field(), (m, n, n));
        for (i, j, k, x) in self.coaction.nonzeros() {
            t[(k, i, j)] = x.clone();
        }
        t
    }

    /// Coaction coassociativity, counit law, multiplicativity and `ρ(1) = 1 ⊗ 1`,
    /// after the algebra and Hopf axioms.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        report.absorb("algebra.", self.alg.validate());
        report.absorb("hopf.", self.hopf.validate());
        if !report.is_ok() {
            return report;
        }
        let (n, m) = (self.dim(), self.hopf.dim());
        let labels = self.labels();
        let rho = &self.coaction;
        let comult = self.hopf.coalgebra().comult();
        for i in 0..n {
            let mut lhs = vec![self.field().zero(); n * m * m];
            let mut rhs = lhs.clone();
            for (j, k, x) in fiber_nonzeros(rho, i) {
                for (j2, k2, y) in fiber_nonzeros(rho, j) {
                    lhs[j2 * m * m + k2 * m + k] += &(x * y);
                }
                for (k1, k2, y) in fiber_nonzeros(comult, k) {
                    rhs[j * m * m + k1 * m + k2] += &(x * y);
                }
            }
            if lhs != rhs {
                report.push(
                    "coaction_coassociativity",
                    format!("fails on {}", labels[i]),
                );
            }
            let counit = self
                .coact(&self.alg.basis_vector(i))
                .mul_vec(self.hopf.counit())
                .expect("shape");
            if counit != self.alg.basis_vector(i) {
                report.push("coaction_counit", format!("(id⊗ε)ρ({0}) != {0}", labels[i]));
            }
        }
        for i in 0..n {
            let ri = self.coact(&self.alg.basis_vector(i));
            for j in 0..n {
                let rj = self.coact(&self.alg.basis_vector(j));
                let lhs = self.coact(self.alg.basis_product(i, j));
                if lhs != tensor_mul(&self.alg, self.hopf.algebra(), &ri, &rj) {
                    report.push(
                        "coaction_multiplicative",
                        format!("ρ({0} {1}) != ρ({0})ρ({1})", labels[i], labels[j]),
                    );
                }
            }
        }
        let one = self.alg.unit();
        let expected = crate::hopfcore::outer(one, self.hopf.unit());
        if self.coact(one) != expected {
            report.push("coaction_unit", "ρ(1) != 1⊗1");
        }
        report
    }
}

pub(crate) fn fiber_nonzeros(t: &Tensor3, i: usize) -> Vec<(usize, usize, &Scalar)> {
    let (_, d2, d3) = t.dims();
    let mut out = Vec::new();
    for j in 0..d2 {
        for (k, x) in t.fiber(i, j).iter().enumerate().take(d3) {
            if !x.is_zero() {
                out.push((j, k, x));
            }
        }
    }
    out
}

/// Product in `A ⊗ B` of elements given as coefficient matrices.
pub fn tensor_mul(a: &AlgebraSC, b: &AlgebraSC, x: &Matrix, y: &Matrix) -> Matrix {
    let (n, m) = (a.dim(), b.dim());
    let mut out = Matrix::zeros(a.field(), n, m);
    let nz = |mat: &Matrix| -> Vec<(usize, usize, Scalar)> {
        let mut v = Vec::new();
        for p in 0..mat.rows() {
            for q in 0..mat.cols() {
                if !mat[(p, q)].is_zero() {
                    v.push((p, q, mat[(p, q)].clone()));
                }
            }
        }
        v
    };
    let ys = nz(y);
    for (p, k, xv) in nz(x) {
        for (q, l, yv) in &ys {
            let c = &xv * yv;
            let left = a.basis_product(p, *q);
            let right = b.basis_product(k, *l);
            for (r, lr) in left.iter().enumerate() {
                if lr.is_zero() {
                    continue;
                }
                let cl = &c * lr;
                for (s, rs) in right.iter().enumerate() {
                    if !rs.is_zero() {
                        out[(r, s)] += &(&cl * rs);
                    }
                }
            }
        }
    }
    out
}

/// Degrees of a coaction of the form `ρ(a_i) = a_i ⊗ h_{d(i)}`, if it has that form.
pub fn basis_degrees(a: &ComoduleAlgebraSC) -> Option<Vec<usize>> {
    (0..a.dim())
        .map(|i| match fiber_nonzeros(a.coaction(), i).as_slice() {
            [(j, k, x)] if *j == i && x.is_one() => Some(*k),
            _ => None,
        })
        .collect()
}
