use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Scalar, Tensor3, Vector};
use crate::report::Report;
use crate::MAX_DERIVED_DIM;

/// A finite-dimensional unital algebra given by structure constants
/// `e_i e_j = sum_k mult[i,j,k] e_k`.
///
/// Construction only checks shapes; [`AlgebraSC::validate`] checks the axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSC {
    labels: Vec<String>,
    mult: Tensor3,
    unit: Vector,
}

impl AlgebraSC {
    pub fn new(labels: Vec<String>, mult: Tensor3, unit: Vector) -> Result<AlgebraSC> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Invalid(
                "an algebra needs a unit, dimension 0 is not allowed".into(),
            ));
        }
        if n > MAX_DERIVED_DIM {
            return Err(Error::CapExceeded {
                dim: n,
                cap: MAX_DERIVED_DIM,
            });
        }
        if mult.dims() != (n, n, n) {
            return Err(Error::DimensionMismatch(format!(
                "multiplication table {:?} for {n} basis labels",
                mult.dims()
            )));
        }
        if unit.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "unit of length {} for {n} basis labels",
                unit.len()
            )));
        }
        if unit.iter().any(|x| x.field() != mult.field()) {
            return Err(Error::FieldMismatch(
                mult.field().to_string(),
                "unit coordinates".into(),
            ));
        }
        Ok(AlgebraSC { labels, mult, unit })
    }

    /// Builds the table from a closure giving `e_i e_j` as a coordinate vector.
    pub fn from_products(
        field: Field,
        labels: Vec<String>,
        unit: Vector,
        mut product: impl FnMut(usize, usize) -> Vector,
    ) -> Result<AlgebraSC> {
        let n = labels.len();
        let mut mult = Tensor3::zeros(field, (n, n, n));
        for i in 0..n {
            for j in 0..n {
                let p = product(i, j);
                if p.len() != n {
                    return Err(Error::DimensionMismatch(format!(
                        "product e_{i} e_{j} has {} coordinates",
                        p.len()
                    )));
                }
                for (k, x) in p.into_iter().enumerate() {
                    mult[(i, j, k)] = x;
                }
            }
        }
        AlgebraSC::new(labels, mult, unit)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> AlgebraSC {
        assert_eq!(
            labels.len(),
            self.dim(),
            "relabelling must keep the dimension"
        );
        self.labels = labels;
        self
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        vector::unit(self.field(), self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vector {
        vector::zeros(self.field(), self.dim())
    }

    /// Product of two elements given in coordinates.
    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.mult.apply_bilinear(a, b)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        self.mult.fiber(i, j)
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mul_matrix(&self, a: &[Scalar]) -> Matrix {
        self.mult
            .contract(0, a)
            .expect("element has algebra dimension")
            .transpose()
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mul_matrix(&self, a: &[Scalar]) -> Matrix {
        self.mult
            .contract(1, a)
            .expect("element has algebra dimension")
            .transpose()
    }

    pub fn is_idempotent(&self, e: &[Scalar]) -> bool {
        self.mul(e, e) == e
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Exhaustive check of associativity and the two unit laws.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let n = self.dim();
        let label = |i: usize| &self.labels[i];
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..n {
                    let left = self.mul(&ij, &self.basis_vector(k));
                    let jk = self.basis_product(j, k);
                    let right = self.mul(&self.basis_vector(i), jk);
                    if left != right {
                        report.push(
                            "associativity",
                            format!(
                                "({} {}) {} != {} ({} {})",
                                label(i),
                                label(j),
                                label(k),
                                label(i),
                                label(j),
                                label(k)
                            ),
                        );
                    }
                }
            }
        }
        for i in 0..n {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e) != e {
                report.push("unit_left", format!("1 {} != {}", label(i), label(i)));
            }
            if self.mul(&e, &self.unit) != e {
                report.push("unit_right", format!("{} 1 != {}", label(i), label(i)));
            }
        }
        report
    }

    /// Structure constants of the subalgebra spanned by the columns of `basis`
    /// (which must be linearly independent, closed under products and contain
    /// the element `unit`, all verified).
    pub fn subalgebra(
        &self,
        labels: Vec<String>,
        basis: &[Vector],
        unit: &[Scalar],
    ) -> Result<AlgebraSC> {
        let n = self.dim();
        let inclusion = Matrix::from_columns(self.field(), n, basis);
        if inclusion.rank() != basis.len() {
            return Err(Error::Invalid(
                "subalgebra basis is linearly dependent".into(),
            ));
        }
        let coords = |v: &[Scalar]| -> Result<Vector> {
            inclusion
                .solve(v)?
                .ok_or_else(|| Error::Invalid("subspace is not closed under multiplication".into()))
        };
        let unit_coords = coords(unit)?;
        let r = basis.len();
        let mut table = Vec::with_capacity(r * r);
        for p in 0..r {
            for q in 0..r {
                table.push(coords(&self.mul(&basis[p], &basis[q]))?);
            }
        }
        AlgebraSC::from_products(self.field(), labels, unit_coords, |p, q| {
            table[p * r + q].clone()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_algebra, sweedler_h4, FiniteGroup};

    const Q: Field = Field::Rational;

    #[test]
    fn group_algebra_is_valid() {
        let a = group_algebra(Q, &FiniteGroup::cyclic(2));
        assert!(a.validate().is_ok());
        assert!(a.is_commutative());
    }

    #[test]
    fn zero_product_breaks_unit_law() {
        let a = group_algebra(Q, &FiniteGroup::cyclic(2));
        let mut mult = a.mult().clone();
        for k in 0..2 {
            mult[(0, 0, k)] = Q.zero();
        }
        let broken = AlgebraSC::new(a.labels().to_vec(), mult, a.unit().to_vec()).unwrap();
        let report = broken.validate();
        assert!(report.has("unit_left"));
        assert!(report.mentions("unit_left", "1 e != e"));
    }

    #[test]
    fn sweedler_relations_give_valid_table() {
        let h = sweedler_h4(Q).unwrap();
        assert!(h.algebra().validate().is_ok());
        assert!(!h.algebra().is_commutative());
    }

    #[test]
    fn broken_associativity_is_reported() {
        let a = group_algebra(Q, &FiniteGroup::cyclic(3));
        let mut mult = a.mult().clone();
        // g * g = e instead of g^2
        mult[(1, 1, 2)] = Q.zero();
        mult[(1, 1, 0)] = Q.one();
        let broken = AlgebraSC::new(a.labels().to_vec(), mult, a.unit().to_vec()).unwrap();
        assert!(broken.validate().has("associativity"));
    }

    #[test]
    fn shape_errors() {
        assert!(AlgebraSC::new(vec![], Tensor3::zeros(Q, (0, 0, 0)), vec![]).is_err());
        assert!(AlgebraSC::new(
            vec!["a".into()],
            Tensor3::zeros(Q, (2, 2, 2)),
            vec![Q.one()]
        )
        .is_err());
    }

    #[test]
    fn multiplication_matrices() {
        let h = sweedler_h4(Q).unwrap();
        let a = h.algebra();
        let c = a.basis_vector(1);
        let x = a.basis_vector(2);
        // c x = cx, x c = -cx
        assert_eq!(
            a.left_mul_matrix(&c).mul_vec(&x).unwrap(),
            a.basis_vector(3)
        );
        assert_eq!(
            a.right_mul_matrix(&c).mul_vec(&x).unwrap(),
            vector::from_i64(Q, &[0, 0, 0, -1])
        );
    }
}
