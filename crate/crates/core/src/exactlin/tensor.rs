use std::ops::{Index, IndexMut};

use super::{vector, Field, Matrix, Scalar, Vector};
use crate::error::{Error, Result};

/// Dense order-3 tensor, index order `(i, j, k)`.
///
/// Holds every structure map in the crate: a multiplication table
/// `e_i e_j = sum_k m[i,j,k] e_k`, a comultiplication
/// `Δ(e_i) = sum_{j,k} Δ[i,j,k] e_j ⊗ e_k`, or a right coaction
/// `ρ(a_i) = sum_{j,k} ρ[i,j,k] a_j ⊗ h_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    field: Field,
    dims: (usize, usize, usize),
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: Field, dims: (usize, usize, usize)) -> Tensor3 {
        Tensor3 {
            field,
            dims,
            data: vec![field.zero(); dims.0 * dims.1 * dims.2],
        }
    }

    /// Builds from nested `[i][j][k]` vectors.
    pub fn from_nested(field: Field, nested: Vec<Vec<Vec<Scalar>>>) -> Result<Tensor3> {
        let d1 = nested.len();
        let d2 = nested.first().map_or(0, Vec::len);
        let d3 = nested.first().and_then(|m| m.first()).map_or(0, Vec::len);
        let mut data = Vec::with_capacity(d1 * d2 * d3);
        for plane in nested {
            if plane.len() != d2 {
                return Err(Error::DimensionMismatch("ragged tensor (axis 1)".into()));
            }
            for row in plane {
                if row.len() != d3 {
                    return Err(Error::DimensionMismatch("ragged tensor (axis 2)".into()));
                }
                data.extend(row);
            }
        }
        if let Some(x) = data.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch(
                field.to_string(),
                x.field().to_string(),
            ));
        }
        Ok(Tensor3 {
            field,
            dims: (d1, d2, d3),
            data,
        })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        let (d1, d2, d3) = self.dims;
        (0..d1)
            .map(|i| {
                (0..d2)
                    .map(|j| (0..d3).map(|k| self[(i, j, k)].clone()).collect())
                    .collect()
            })
            .collect()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    /// Nonzero entries as `(i, j, k, value)`.
    pub fn nonzeros(&self) -> Vec<(usize, usize, usize, &Scalar)> {
        let (_, d2, d3) = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(idx, x)| (idx / (d2 * d3), (idx / d3) % d2, idx % d3, x))
            .collect()
    }

    /// The vector `T[i, j, ·]`.
    pub fn fiber(&self, i: usize, j: usize) -> &[Scalar] {
        let (_, d2, d3) = self.dims;
        let start = (i * d2 + j) * d3;
        &self.data[start..start + d3]
    }

    /// The matrix `T[i, ·, ·]`.
    pub fn slice(&self, i: usize) -> Matrix {
        let (_, d2, d3) = self.dims;
        let mut m = Matrix::zeros(self.field, d2, d3);
        for j in 0..d2 {
            for k in 0..d3 {
                m[(j, k)] = self[(i, j, k)].clone();
            }
        }
        m
    }

    /// Sums `v` against one axis (0, 1 or 2); the result is indexed by the two
    /// remaining axes in their original order.
    pub fn contract(&self, axis: usize, v: &[Scalar]) -> Result<Matrix> {
        let (d1, d2, d3) = self.dims;
        let axis_len = match axis {
            0 => d1,
            1 => d2,
            2 => d3,
            _ => {
                return Err(Error::DimensionMismatch(format!(
                    "no axis {axis} on an order-3 tensor"
                )))
            }
        };
        if v.len() != axis_len {
            return Err(Error::DimensionMismatch(format!(
                "contracting axis {axis} of length {axis_len} with a vector of length {}",
                v.len()
            )));
        }
        let (r, c) = match axis {
            0 => (d2, d3),
            1 => (d1, d3),
            _ => (d1, d2),
        };
        let mut out = Matrix::zeros(self.field, r, c);
        if axis == 0 {
            for (i, vi) in v.iter().enumerate() {
                if vi.is_zero() {
                    continue;
                }
                for j in 0..d2 {
                    for (k, x) in self.fiber(i, j).iter().enumerate() {
                        if !x.is_zero() {
                            out[(j, k)] += &(x * vi);
                        }
                    }
                }
            }
            return Ok(out);
        }
        for (i, j, k, x) in self.nonzeros() {
            let (idx, row, col) = match axis {
                0 => (i, j, k),
                1 => (j, i, k),
                _ => (k, i, j),
            };
            if v[idx].is_zero() {
                continue;
            }
            let add = x * &v[idx];
            out[(row, col)] += &add;
        }
        Ok(out)
    }

    /// `sum_{i,j} a_i b_j T[i,j,·]`: the bilinear map encoded by the tensor.
    pub fn apply_bilinear(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let (d1, d2, d3) = self.dims;
        assert_eq!(a.len(), d1, "first argument length");
        assert_eq!(b.len(), d2, "second argument length");
        let mut out = vector::zeros(self.field, d3);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                vector::axpy(&mut out, &c, self.fiber(i, j));
            }
        }
        out
    }

    /// `sum_i v_i T[i,·,·]`, i.e. the image of `v` under a map into a tensor square.
    pub fn apply_first(&self, v: &[Scalar]) -> Matrix {
        self.contract(0, v).expect("vector length matches axis 0")
    }
}

impl Index<(usize, usize, usize)> for Tensor3 {
    type Output = Scalar;
    fn index(&self, (i, j, k): (usize, usize, usize)) -> &Scalar {
        let (d1, d2, d3) = self.dims;
        assert!(i < d1 && j < d2 && k < d3, "tensor index out of range");
        &self.data[(i * d2 + j) * d3 + k]
    }
}

impl IndexMut<(usize, usize, usize)> for Tensor3 {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut Scalar {
        let (d1, d2, d3) = self.dims;
        assert!(i < d1 && j < d2 && k < d3, "tensor index out of range");
        &mut self.data[(i * d2 + j) * d3 + k]
    }
}
