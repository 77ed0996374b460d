use super::{AlgebraSC, CoalgebraSC};
use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Scalar, Tensor3, Vector};
use crate::report::Report;

/// A finite-dimensional Hopf algebra as structure constants.
///
/// The antipode is stored as a matrix acting on column vectors: `S(e_j)` is
/// column `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfSC {
    alg: AlgebraSC,
    coalg: CoalgebraSC,
    antipode: Matrix,
}

impl HopfSC {
    pub fn new(alg: AlgebraSC, coalg: CoalgebraSC, antipode: Matrix) -> Result<HopfSC> {
        let n = alg.dim();
        if coalg.dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "algebra of dimension {n} with coalgebra of dimension {}",
                coalg.dim()
            )));
        }
        if (antipode.rows(), antipode.cols()) != (n, n) {
            return Err(Error::DimensionMismatch(
                "antipode must be square of the algebra dimension".into(),
            ));
        }
        if coalg.field() != alg.field() || antipode.field() != alg.field() {
            return Err(Error::FieldMismatch(
                alg.field().to_string(),
                coalg.field().to_string(),
            ));
        }
        Ok(HopfSC {
            alg,
            coalg,
            antipode,
        })
    }

    /// The one-dimensional Hopf algebra `k`.
    pub fn trivial(field: Field) -> HopfSC {
        let mut t = Tensor3::zeros(field, (1, 1, 1));
        t[(0, 0, 0)] = field.one();
        let alg = AlgebraSC::new(vec!["1".into()], t.clone(), vec![field.one()])
            .expect("k is an algebra");
        let coalg = CoalgebraSC::new(t, vec![field.one()]).expect("k is a coalgebra");
        HopfSC::new(alg, coalg, Matrix::identity(field, 1)).expect("k is a Hopf algebra")
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

    pub fn algebra(&self) -> &AlgebraSC {
        &self.alg
    }

    pub fn coalgebra(&self) -> &CoalgebraSC {
        &self.coalg
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn unit(&self) -> &[Scalar] {
        self.alg.unit()
    }

    pub fn counit(&self) -> &[Scalar] {
        self.coalg.counit()
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.alg.mul(a, b)
    }

    pub fn coproduct(&self, v: &[Scalar]) -> Matrix {
        self.coalg.coproduct(v)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.alg.basis_vector(i)
    }

    /// `S(v)`.
    pub fn apply_antipode(&self, v: &[Scalar]) -> Vector {
        self.antipode
            .mul_vec(v)
            .expect("element has Hopf dimension")
    }

    /// Multiplication in `H ⊗ H`, elements given as coefficient matrices.
    pub fn tensor_square_mul(&self, x: &Matrix, y: &Matrix) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(self.field(), n, n);
        for a in 0..n {
            for b in 0..n {
                let xab = &x[(a, b)];
                if xab.is_zero() {
                    continue;
                }
                for c in 0..n {
                    for d in 0..n {
                        let ycd = &y[(c, d)];
                        if ycd.is_zero() {
                            continue;
                        }
                        let coeff = xab * ycd;
                        let left = self.alg.basis_product(a, c);
                        let right = self.alg.basis_product(b, d);
                        for (p, lp) in left.iter().enumerate() {
                            if lp.is_zero() {
                                continue;
                            }
                            let cl = &coeff * lp;
                            for (q, rq) in right.iter().enumerate() {
                                if !rq.is_zero() {
                                    out[(p, q)] += &(&cl * rq);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Full axiom check: algebra, coalgebra, bialgebra compatibility, the
    /// antipode identities on every basis element, and invertibility of `S`.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let labels = self.labels().to_vec();
        report.absorb("", self.alg.validate());
        report.absorb("", self.coalg.validate(&labels));
        if !report.is_ok() {
            return report;
        }
        let n = self.dim();
        let field = self.field();
        let eps = self.counit();
        for i in 0..n {
            let di = self.coproduct(&self.basis_vector(i));
            for j in 0..n {
                let prod = self.alg.basis_product(i, j).to_vec();
                let dj = self.coproduct(&self.basis_vector(j));
                if self.coproduct(&prod) != self.tensor_square_mul(&di, &dj) {
                    report.push(
                        "comultiplicative",
                        format!(
                            "Δ({} {}) != Δ({})Δ({})",
                            labels[i], labels[j], labels[i], labels[j]
                        ),
                    );
                }
                if vector::dot(eps, &prod) != &eps[i] * &eps[j] {
                    report.push(
                        "counit_multiplicative",
                        format!(
                            "ε({} {}) != ε({})ε({})",
                            labels[i], labels[j], labels[i], labels[j]
                        ),
                    );
                }
            }
        }
        let one = self.unit().to_vec();
        let one_one = outer(&one, &one);
        if self.coproduct(&one) != one_one {
            report.push("unit_grouplike", "Δ(1) != 1⊗1");
        }
        if !vector::dot(eps, &one).is_one() {
            report.push("unit_grouplike", "ε(1) != 1");
        }
        for i in 0..n {
            let d = self.coproduct(&self.basis_vector(i));
            let expected = vector::scale(&eps[i], &one);
            let mut left = vector::zeros(field, n);
            let mut right = vector::zeros(field, n);
            for a in 0..n {
                for b in 0..n {
                    let c = &d[(a, b)];
                    if c.is_zero() {
                        continue;
                    }
                    let sa = self.apply_antipode(&self.basis_vector(a));
                    let sb = self.apply_antipode(&self.basis_vector(b));
                    vector::axpy(&mut left, c, &self.mul(&sa, &self.basis_vector(b)));
                    vector::axpy(&mut right, c, &self.mul(&self.basis_vector(a), &sb));
                }
            }
            if left != expected {
                report.push(
                    "antipode",
                    format!("S({0}_1){0}_2 != ε({0})1 on {0}", labels[i]),
                );
            }
            if right != expected {
                report.push(
                    "antipode",
                    format!("{0}_1 S({0}_2) != ε({0})1 on {0}", labels[i]),
                );
            }
        }
        if !self.antipode.is_invertible() {
            report.push("antipode_invertible", "S is singular");
        }
        if self.apply_antipode(&one) != one {
            report.push("antipode_unit", "S(1) != 1");
        }
        if self.antipode.vec_mul(eps).expect("square") != eps {
            report.push("antipode_counit", "ε∘S != ε");
        }
        report
    }

    /// The dual Hopf algebra on the dual basis `P_<label>`: convolution
    /// product, comultiplication transposed from the product, unit `ε`,
    /// counit evaluation at 1, antipode `S^T`.
    pub fn dual(&self) -> HopfSC {
        let n = self.dim();
        let field = self.field();
        let mut mult = Tensor3::zeros(field, (n, n, n));
        let mut comult = Tensor3::zeros(field, (n, n, n));
        for (i, a, b, x) in self.coalg.comult().nonzeros() {
            mult[(a, b, i)] = x.clone();
        }
        for (a, b, i, x) in self.alg.mult().nonzeros() {
            comult[(i, a, b)] = x.clone();
        }
        let labels = self.labels().iter().map(|l| format!("P_{l}")).collect();
        let alg = AlgebraSC::new(labels, mult, self.counit().to_vec()).expect("shapes carry over");
        let coalg = CoalgebraSC::new(comult, self.unit().to_vec()).expect("shapes carry over");
        HopfSC::new(alg, coalg, self.antipode.transpose()).expect("shapes carry over")
    }

    pub fn antipode_square(&self) -> Matrix {
        self.antipode.mul(&self.antipode).expect("square")
    }

    pub fn antipode_inverse(&self) -> Option<Matrix> {
        self.antipode.inverse()
    }

    pub fn is_involutory(&self) -> bool {
        self.antipode_square().is_identity()
    }

    /// Whether `u` is an algebra map `H → k`.
    pub fn verify_character(&self, u: &[Scalar]) -> bool {
        let n = self.dim();
        if u.len() != n || !vector::dot(u, self.unit()).is_one() {
            return false;
        }
        (0..n)
            .all(|i| (0..n).all(|j| vector::dot(u, self.alg.basis_product(i, j)) == &u[i] * &u[j]))
    }

    /// Convolution product of two functionals on `H`.
    pub fn convolve(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        (0..self.dim())
            .map(|i| {
                let d = self.coproduct(&self.basis_vector(i));
                vector::dot(&d.mul_vec(v).expect("square"), u)
            })
            .collect()
    }

    /// `u ∘ S`, the convolution inverse of a character.
    pub fn character_inverse(&self, u: &[Scalar]) -> Vector {
        self.antipode
            .vec_mul(u)
            .expect("covector has Hopf dimension")
    }

    pub fn is_grouplike(&self, g: &[Scalar]) -> bool {
        self.coproduct(g) == outer(g, g) && vector::dot(self.counit(), g).is_one()
    }

    /// Checks that `f: self → other` (matrix on column vectors) is a Hopf
    /// algebra isomorphism; the report names each failing structure map.
    pub fn isomorphism_report(&self, other: &HopfSC, f: &Matrix) -> Report {
        let mut report = Report::new();
        let n = self.dim();
        if other.dim() != n || (f.rows(), f.cols()) != (n, n) {
            report.push("shape", "dimension mismatch");
            return report;
        }
        if !f.is_invertible() {
            report.push("invertible", "matrix is singular");
        }
        let image = |v: &[Scalar]| f.mul_vec(v).expect("square");
        for i in 0..n {
            for j in 0..n {
                let lhs = image(self.alg.basis_product(i, j));
                let rhs = other.mul(&f.column(i), &f.column(j));
                if lhs != rhs {
                    report.push(
                        "multiplication",
                        format!(
                            "F({} {}) != F({})F({})",
                            self.labels()[i],
                            self.labels()[j],
                            self.labels()[i],
                            self.labels()[j]
                        ),
                    );
                }
            }
        }
        if image(self.unit()) != other.unit() {
            report.push("unit", "F(1) != 1");
        }
        let ft = f.transpose();
        for i in 0..n {
            let pushed = f
                .mul(&self.coproduct(&self.basis_vector(i)))
                .and_then(|m| m.mul(&ft))
                .expect("square");
            if pushed != other.coproduct(&f.column(i)) {
                report.push(
                    "comultiplication",
                    format!("(F⊗F)Δ({0}) != Δ(F({0}))", self.labels()[i]),
                );
            }
        }
        if f.vec_mul(other.counit()).expect("square") != self.counit() {
            report.push("counit", "ε∘F != ε");
        }
        if f.mul(&self.antipode).expect("square") != other.antipode.mul(f).expect("square") {
            report.push("antipode", "F∘S != S∘F");
        }
        report
    }

    pub fn is_isomorphic_via(&self, other: &HopfSC, f: &Matrix) -> bool {
        self.isomorphism_report(other, f).is_ok()
    }
}

/// `a ⊗ b` as a coefficient matrix.
pub fn outer(a: &[Scalar], b: &[Scalar]) -> Matrix {
    let field = a.first().map_or(Field::Rational, Scalar::field);
    let mut m = Matrix::zeros(field, a.len(), b.len());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            m[(i, j)] = x * y;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_hopf, h4_self_duality, sweedler_h4, FiniteGroup};

    const Q: Field = Field::Rational;

    fn q(v: &[i64]) -> Vector {
        vector::from_i64(Q, v)
    }

    #[test]
    fn catalog_hopf_algebras_validate() {
        for h in [
            group_hopf(Q, &FiniteGroup::cyclic(2)),
            group_hopf(Q, &FiniteGroup::cyclic(3)),
            sweedler_h4(Q).unwrap(),
            sweedler_h4(Q).unwrap().dual(),
            HopfSC::trivial(Q),
        ] {
            let r = h.validate();
            assert!(r.is_ok(), "{r}");
        }
    }

    #[test]
    fn identity_antipode_fails_on_x() {
        let h = sweedler_h4(Q).unwrap();
        let broken = HopfSC::new(
            h.algebra().clone(),
            h.coalgebra().clone(),
            Matrix::identity(Q, 4),
        )
        .unwrap();
        let report = broken.validate();
        assert!(report.mentions("antipode", "on x"), "{report}");
        // hand evaluation: S(x_1)x_2 = c·x + x·1 = cx + x, while ε(x)1 = 0
        let x = h.basis_vector(2);
        let d = h.coproduct(&x);
        let mut acc = vector::zeros(Q, 4);
        for a in 0..4 {
            for b in 0..4 {
                vector::axpy(
                    &mut acc,
                    &d[(a, b)],
                    &h.mul(&h.basis_vector(a), &h.basis_vector(b)),
                );
            }
        }
        assert_eq!(acc, q(&[0, 0, 1, 1]));
    }

    #[test]
    fn dual_of_kc2_is_pointwise() {
        let h = group_hopf(Q, &FiniteGroup::cyclic(2)).dual();
        assert_eq!(h.labels(), ["P_e", "P_g"]);
        let pe = h.basis_vector(0);
        let pg = h.basis_vector(1);
        assert_eq!(h.mul(&pe, &pe), pe);
        assert_eq!(h.mul(&pg, &pg), pg);
        assert_eq!(h.mul(&pe, &pg), q(&[0, 0]));
        assert_eq!(h.unit(), q(&[1, 1]).as_slice());
    }

    #[test]
    fn double_dual_is_identity_on_tensors() {
        let h = sweedler_h4(Q).unwrap();
        let dd = h.dual().dual();
        assert_eq!(dd.algebra().mult(), h.algebra().mult());
        assert_eq!(dd.coalgebra().comult(), h.coalgebra().comult());
        assert_eq!(dd.unit(), h.unit());
        assert_eq!(dd.counit(), h.counit());
        assert_eq!(dd.antipode(), h.antipode());
    }

    #[test]
    fn h4_is_self_dual() {
        let h = sweedler_h4(Q).unwrap();
        let f = h4_self_duality(Q);
        assert!(h.is_isomorphic_via(&h.dual(), &f));
        assert!(h.is_isomorphic_via(&h, &Matrix::identity(Q, 4)));
        let mut swap = Matrix::identity(Q, 4);
        swap[(0, 0)] = Q.zero();
        swap[(1, 1)] = Q.zero();
        swap[(0, 1)] = Q.one();
        swap[(1, 0)] = Q.one();
        let report = h.isomorphism_report(&h, &swap);
        assert!(report.has("unit"), "{report}");
    }

    #[test]
    fn involutory_flags() {
        assert!(group_hopf(Q, &FiniteGroup::cyclic(2)).is_involutory());
        assert!(group_hopf(Q, &FiniteGroup::symmetric3()).is_involutory());
        let h = sweedler_h4(Q).unwrap();
        assert!(!h.is_involutory());
        assert_eq!(
            h.antipode_square().mul_vec(&h.basis_vector(2)).unwrap(),
            q(&[0, 0, -1, 0])
        );
    }

    #[test]
    fn characters() {
        let h = sweedler_h4(Q).unwrap();
        let alpha = q(&[1, -1, 0, 0]);
        assert!(h.verify_character(&alpha));
        assert!(h.verify_character(h.counit()));
        assert!(!h.verify_character(&q(&[2, 1, 0, 0])));
        assert_eq!(h.convolve(&alpha, &h.character_inverse(&alpha)), h.counit());

        let kc2 = group_hopf(Q, &FiniteGroup::cyclic(2));
        let u = q(&[1, -1]);
        assert!(kc2.verify_character(&u));
        assert_eq!(kc2.character_inverse(&u), u);
        assert_eq!(kc2.convolve(&u, &u), kc2.counit());
    }

    #[test]
    fn characters_of_h4_by_enumeration() {
        // u(c) = ±1 is forced by c² = 1 and u(x)² = u(x²) = 0; scan a grid anyway.
        let h = sweedler_h4(Q).unwrap();
        let mut found = Vec::new();
        for uc in -2..=2 {
            for ux in -2..=2 {
                for ucx in -2..=2 {
                    let u = q(&[1, uc, ux, ucx]);
                    if h.verify_character(&u) {
                        found.push(u);
                    }
                }
            }
        }
        assert_eq!(found, vec![q(&[1, -1, 0, 0]), q(&[1, 1, 0, 0])]);
    }
}
