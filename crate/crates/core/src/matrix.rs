//! Dense exact matrices. Vectors are rows; a matrix acts on the right.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
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
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows. All rows must have length `cols`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            if row.iter().any(|x| x.field() != field) {
                return Err(Error::FieldMismatch);
            }
            data.extend(row);
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    /// Convenience constructor from integer entries.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, cols, rows).expect("ragged integer matrix")
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        debug_assert_eq!(value.field(), self.field);
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            data.extend(rhs.left_mul_unchecked(self.row(i)));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        Ok(self.left_mul_unchecked(v))
    }

    pub(crate) fn left_mul_unchecked(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.cols];
        for (k, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let entry = self.get(k, j);
                if !entry.is_zero() {
                    *slot = &*slot + &(coeff * entry);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_shape(rhs)?;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Ok(self.with_data(data))
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_shape(rhs)?;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Ok(self.with_data(data))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        self.with_data(data)
    }

    fn with_data(&self, data: Vec<Scalar>) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    fn same_field(&self, rhs: &Matrix) -> Result<()> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    fn same_shape(&self, rhs: &Matrix) -> Result<()> {
        self.same_field(rhs)?;
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        Ok(())
    }

    /// Stacks `self` above `rhs`.
    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Ok(Matrix {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        })
    }

    /// Places `rhs` to the right of `self`.
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: rhs.rows,
            });
        }
        let mut data = Vec::with_capacity(self.data.len() + rhs.data.len());
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(rhs.row(i));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols + rhs.cols,
            data,
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix {
            field: self.field,
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for i in 0..self.rows {
            data.extend(idx.iter().map(|&j| self.get(i, j).clone()));
        }
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: idx.len(),
            data,
        }
    }

    /// Copies `block` into `self` with its top-left corner at `(row, col)`.
    pub fn set_block(&mut self, row: usize, col: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(row + i, col + j, block.get(i, j).clone());
            }
        }
    }

    /// Reduced row-echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inverse().expect("nonzero pivot");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let x = m.get(i, j).sub_mul(&f, m.get(r, j));
                    m.data[i * m.cols + j] = x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            reduced: m,
            rank: pivots.len(),
            pivots,
        }
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
        self.rref().rank
    }

    /// Canonical basis of the row space: the nonzero rows of the RREF.
    pub fn row_space(&self) -> Matrix {
        let Rref { reduced, rank, .. } = self.rref();
        reduced.select_rows(&(0..rank).collect::<Vec<_>>())
    }

    /// Rows spanning `{x | self * x^T = 0}`, the right kernel.
    pub fn kernel(&self) -> Matrix {
        let Rref { reduced, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.field, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            basis.set(k, f, self.field.one());
            for (r, &p) in pivots.iter().enumerate() {
                basis.set(k, p, -reduced.get(r, f));
            }
        }
        basis
    }

    /// Rows spanning the left null space `{v | v * self = 0}`.
    pub fn nullspace(&self) -> Matrix {
        self.transpose().kernel()
    }

    /// Whether `v` lies in the row space of `self`.
    pub fn spans(&self, v: &[Scalar]) -> bool {
        let mut e = Echelon::new(self.field, self.cols);
        for r in self.row_vecs() {
            e.insert(r.to_vec());
        }
        e.reduce(v.to_vec()).iter().all(Scalar::is_zero)
    }

    /// Row spaces equal as subspaces.
    pub fn same_row_space(&self, other: &Matrix) -> bool {
        self.cols == other.cols && self.row_space() == other.row_space()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Incrementally built semi-echelon basis; used for spinning.
///
/// Each stored row is normalized to 1 at its pivot and vanishes at the pivots
/// of all earlier rows, so reducing against rows in insertion order clears
/// every pivot position.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: Field,
    dim: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    pub fn new(field: Field, dim: usize) -> Echelon {
        Echelon {
            field,
            dim,
            rows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.sub_mul(&f, y);
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns the new basis row when `v` was independent.
    pub fn insert(&mut self, v: Vec<Scalar>) -> Option<Vec<Scalar>> {
        let v = self.reduce(v);
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = v[p].inverse().expect("nonzero");
        let v: Vec<Scalar> = v.iter().map(|x| x * &inv).collect();
        self.rows.push((p, v.clone()));
        Some(v)
    }

    pub fn to_matrix(&self) -> Matrix {
        let rows = self.rows.iter().map(|(_, r)| r.clone()).collect();
        Matrix::from_rows(self.field, self.dim, rows).expect("uniform rows")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_and_zero() {
        let q = Field::Rational;
        let id = Matrix::identity(q, 3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 3);
        let z = Matrix::zeros(q, 2, 4);
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_dependent_rows() {
        let q = Field::Rational;
        let m = Matrix::from_i64(q, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.reduced, Matrix::from_i64(q, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn nullspace_cases() {
        let f2 = Field::Prime(2);
        assert_eq!(Matrix::identity(f2, 3).nullspace().rows(), 0);
        let z = Matrix::zeros(f2, 3, 2);
        assert_eq!(z.nullspace().row_space(), Matrix::identity(f2, 3));
        let m = Matrix::from_i64(f2, &[&[1], &[1]]);
        assert_eq!(m.nullspace(), Matrix::from_i64(f2, &[&[1, 1]]));
    }

    #[test]
    fn kernel_is_right_kernel() {
        let q = Field::Rational;
        let m = Matrix::from_i64(q, &[&[1, 2, 3], &[4, 5, 6]]);
        let k = m.kernel();
        assert_eq!(k.rows(), 1);
        let prod = m.mul(&k.transpose()).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn stacking_and_selection() {
        let q = Field::Rational;
        let a = Matrix::from_i64(q, &[&[1, 2]]);
        let b = Matrix::from_i64(q, &[&[3, 4]]);
        let v = a.vstack(&b).unwrap();
        assert_eq!(v, Matrix::from_i64(q, &[&[1, 2], &[3, 4]]));
        assert_eq!(a.hstack(&b).unwrap(), Matrix::from_i64(q, &[&[1, 2, 3, 4]]));
        assert_eq!(v.select_cols(&[1]), Matrix::from_i64(q, &[&[2], &[4]]));
        assert!(a.mul(&a).is_err());
        assert_eq!(a.vstack(&Matrix::zeros(Field::Prime(3), 1, 2)), Err(Error::FieldMismatch));
    }

    #[test]
    fn echelon_membership() {
        let q = Field::Rational;
        let m = Matrix::from_i64(q, &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(m.spans(&[q.from_i64(1), q.from_i64(2), q.from_i64(1)]));
        assert!(!m.spans(&[q.from_i64(1), q.from_i64(0), q.from_i64(0)]));
    }
}
