use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Scalar, Tensor3, Vector};
use crate::report::Report;

/// A coalgebra `Δ(e_i) = sum_{j,k} comult[i,j,k] e_j ⊗ e_k` with counit `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraSC {
    comult: Tensor3,
    counit: Vector,
}

impl CoalgebraSC {
    pub fn new(comult: Tensor3, counit: Vector) -> Result<CoalgebraSC> {
        let n = counit.len();
        if comult.dims() != (n, n, n) {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication {:?} for counit of length {n}",
                comult.dims()
            )));
        }
        Ok(CoalgebraSC { comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn comult(&self) -> &Tensor3 {
        &self.comult
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// `Δ(v)` as an `n × n` coefficient matrix of `e_j ⊗ e_k`.
    pub fn coproduct(&self, v: &[Scalar]) -> Matrix {
        self.comult.apply_first(v)
    }

    /// `Δ²(e_i) = (Δ ⊗ id)Δ(e_i)` as a dense `n³` coefficient array indexed
    /// `(a, b, c) ↦ a*n*n + b*n + c`.
    pub fn double_coproduct_left(&self, i: usize) -> Vector {
        let n = self.dim();
        let mut out = vector::zeros(self.field(), n * n * n);
        for k in 0..n {
            for j in 0..n {
                let c = &self.comult[(i, j, k)];
                if c.is_zero() {
                    continue;
                }
                for a in 0..n {
                    for b in 0..n {
                        let d = &self.comult[(j, a, b)];
                        if !d.is_zero() {
                            out[a * n * n + b * n + k] += &(c * d);
                        }
                    }
                }
            }
        }
        out
    }

    /// `(id ⊗ Δ)Δ(e_i)` in the same layout as [`Self::double_coproduct_left`].
    pub fn double_coproduct_right(&self, i: usize) -> Vector {
        let n = self.dim();
        let mut out = vector::zeros(self.field(), n * n * n);
        for j in 0..n {
            for k in 0..n {
                let c = &self.comult[(i, j, k)];
                if c.is_zero() {
                    continue;
                }
                for a in 0..n {
                    for b in 0..n {
                        let d = &self.comult[(k, a, b)];
                        if !d.is_zero() {
                            out[j * n * n + a * n + b] += &(c * d);
                        }
                    }
                }
            }
        }
        out
    }

    /// Coassociativity and both counit laws, per basis element.
    pub fn validate(&self, labels: &[String]) -> Report {
        let mut report = Report::new();
        let n = self.dim();
        for i in 0..n {
            if self.double_coproduct_left(i) != self.double_coproduct_right(i) {
                report.push("coassociativity", format!("fails on {}", labels[i]));
            }
            let d = self.coproduct(&vector::unit(self.field(), n, i));
            let e = vector::unit(self.field(), n, i);
            // (ε ⊗ id)Δ: contract rows with ε
            if d.vec_mul(&self.counit).expect("square") != e {
                report.push(
                    "counit_left",
                    format!("(ε⊗id)Δ({}) != {}", labels[i], labels[i]),
                );
            }
            if d.mul_vec(&self.counit).expect("square") != e {
                report.push(
                    "counit_right",
                    format!("(id⊗ε)Δ({}) != {}", labels[i], labels[i]),
                );
            }
        }
        report
    }
}
