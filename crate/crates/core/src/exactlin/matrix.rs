use std::fmt;
use std::ops::{Index, IndexMut};

use super::{vector, Field, Scalar, Vector};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
///
/// Linear maps act on column vectors: the matrix of `f` has the coordinates of
/// `f(e_j)` in column `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vector>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        if let Some(x) = data.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch(
                field.to_string(),
                x.field().to_string(),
            ));
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let vs = rows.iter().map(|r| vector::from_i64(field, r)).collect();
        Matrix::from_rows(field, vs).expect("rectangular integer literal")
    }

    /// The matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k).to_vec();
                let start = i * out.cols;
                vector::axpy(&mut out.data[start..start + other.cols], a, &orow);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| vector::dot(self.row(i), v))
            .collect())
    }

    /// Row vector times matrix: `v^T M`.
    pub fn vec_mul(&self, v: &[Scalar]) -> Result<Vector> {
        if self.rows != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "covector of length {} times {}x{}",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vector::zeros(self.field, self.cols);
        for (i, c) in v.iter().enumerate() {
            vector::axpy(&mut out, c, self.row(i));
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vector::add(&self.data, &other.data),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix difference".into()));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vector::sub(&self.data, &other.data),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vector::scale(c, &self.data),
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols && self.rows != 0 && other.rows != 0 {
            return Err(Error::DimensionMismatch("vstack column counts".into()));
        }
        let cols = if self.rows == 0 {
            other.cols
        } else {
            self.cols
        };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    /// Appends a row.
    pub fn push_row(&mut self, row: Vector) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.data.extend(row);
        self.rows += 1;
    }

    /// An empty (0-row) matrix with `cols` columns, used to accumulate constraint rows.
    pub fn empty_rows(field: Field, cols: usize) -> Matrix {
        Matrix {
            field,
            rows: 0,
            cols,
            data: Vec::new(),
        }
    }

    /// Reduced row echelon form and pivot columns. Pivots are chosen as the
    /// first nonzero entry in each column (no magnitude heuristics).
    pub fn row_reduce(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for j in c..m.cols {
                    let x = &m[(r, j)] * &inv;
                    m[(r, j)] = x;
                }
            }
            let pivot_row: Vector = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                let start = i * m.cols + c;
                let end = start + pivot_row.len();
                let neg = -factor;
                vector::axpy(&mut m.data[start..end], &neg, &pivot_row);
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().1.len()
    }

    /// Rank together with a kernel basis. The basis is the standard one read off
    /// the reduced echelon form: one vector per free column, with a 1 in that
    /// column and zeros in the other free columns.
    pub fn rank_kernel(&self) -> (usize, Vec<Vector>) {
        let (rref, pivots) = self.row_reduce();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vector::zeros(self.field, self.cols);
            v[free] = self.field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&rref[(r, free)];
            }
            basis.push(v);
        }
        (pivots.len(), basis)
    }

    pub fn kernel(&self) -> Vec<Vector> {
        self.rank_kernel().1
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (rref, pivots) = aug.row_reduce();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vector::zeros(self.field, self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = rref[(r, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.field.one();
        }
        let (rref, pivots) = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = rref[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "determinant of non-square matrix".into(),
            ));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("pivot is nonzero");
            let prow: Vector = m.row(c)[c..].to_vec();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = -(&m[(i, c)] * &inv);
                let start = i * n + c;
                vector::axpy(&mut m.data[start..start + prow.len()], &factor, &prow);
            }
        }
        Ok(det)
    }

    pub fn power(&self, k: u32) -> Result<Matrix> {
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(
                f,
                "[{}]",
                self.row(i)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn identity_has_full_rank() {
        let (rank, kernel) = Matrix::identity(Q, 3).rank_kernel();
        assert_eq!(rank, 3);
        assert!(kernel.is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let (rank, kernel) = Matrix::zeros(Q, 2, 3).rank_kernel();
        assert_eq!(rank, 0);
        assert_eq!(kernel.len(), 3);
        assert_eq!(kernel[1], vector::unit(Q, 3, 1));
    }

    #[test]
    fn proportional_rows() {
        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let (rank, kernel) = m.rank_kernel();
        assert_eq!(rank, 1);
        assert_eq!(kernel, vec![vector::from_i64(Q, &[-2, 1])]);
    }

    #[test]
    fn solve_cases() {
        let b = vector::from_i64(Q, &[4, -1, 7]);
        assert_eq!(Matrix::identity(Q, 3).solve(&b).unwrap(), Some(b.clone()));

        let m = Matrix::from_i64(Q, &[&[1, 1]]);
        assert_eq!(
            m.solve(&vector::from_i64(Q, &[2])).unwrap(),
            Some(vector::from_i64(Q, &[2, 0]))
        );

        let m = Matrix::from_i64(Q, &[&[1, 1], &[1, 1]]);
        assert_eq!(m.solve(&vector::from_i64(Q, &[1, 2])).unwrap(), None);
        assert!(m.solve(&vector::from_i64(Q, &[1])).is_err());
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_i64(Q, &[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant().unwrap(), Q.one());
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert_eq!(inv, Matrix::from_i64(Q, &[&[4, -1], &[-7, 2]]));
        let singular = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
        assert!(singular.determinant().unwrap().is_zero());
        let swap = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.determinant().unwrap(), Q.from_i64(-1));
    }

    #[test]
    fn modular_rank_differs_from_rational() {
        // det = 5, singular mod 5
        let rows: &[&[i64]] = &[&[1, 2], &[3, 11]];
        assert_eq!(Matrix::from_i64(Q, rows).rank(), 2);
        assert_eq!(Matrix::from_i64(Field::Prime(5), rows).rank(), 1);
    }
}
