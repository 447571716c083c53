use std::fmt;

use num_traits::{One, Zero};

use super::echelon::{rank_of, Echelon};
use super::rational::{dense_from_sparse, sparse_from_dense, Rational, SparseVec};
use crate::error::{Error, Result};

/// Dense exact-rational matrix, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        Ok(QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a `rows × cols` matrix whose `j`-th column is the sparse vector
    /// `columns[j]`.
    pub fn from_sparse_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut m = QMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col {
                m.set(*i, j, x.clone());
            }
        }
        m
    }

    pub fn from_sparse_rows(cols: usize, rows: &[SparseVec]) -> Self {
        let mut m = QMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row {
                m.set(i, *j, x.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn sparse_row(&self, i: usize) -> SparseVec {
        sparse_from_dense(self.row(i))
    }

    pub fn sparse_column(&self, j: usize) -> SparseVec {
        sparse_from_dense(&self.column(j))
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        (0..self.rows).map(|i| self.sparse_row(i)).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn sub_scalar_identity(&self, c: &Rational) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = m.get(i, i) - c;
            m.set(i, i, v);
        }
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        rank_of(self.cols, &self.sparse_rows())
    }

    /// Basis of `{x : Mx = 0}`, one vector per free column of the RREF.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let mut e = Echelon::new(self.cols);
        for r in self.sparse_rows() {
            e.insert(&r);
        }
        e.kernel_basis()
    }

    pub fn rref(&self) -> Vec<SparseVec> {
        let mut e = Echelon::new(self.cols);
        for r in self.sparse_rows() {
            e.insert(&r);
        }
        e.into_rref()
    }

    pub fn trace(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).fold(Rational::zero(), |acc, i| acc + self.get(i, i)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        (0..self.rows).all(|i| (0..self.cols).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Inverse of a square matrix by Gauss–Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut inv: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut r = vec![Rational::zero(); n];
                r[i] = Rational::one();
                r
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&i| !a[i][c].is_zero())?;
            a.swap(c, p);
            inv.swap(c, p);
            let pinv = a[c][c].recip();
            for j in 0..n {
                a[c][j] *= &pinv;
                inv[c][j] *= &pinv;
            }
            for i in 0..n {
                if i == c || a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].clone();
                for j in 0..n {
                    if !a[c][j].is_zero() {
                        let t = &f * &a[c][j];
                        a[i][j] -= t;
                    }
                    if !inv[c][j].is_zero() {
                        let t = &f * &inv[c][j];
                        inv[i][j] -= t;
                    }
                }
            }
        }
        Some(QMatrix {
            rows: n,
            cols: n,
            data: inv.into_iter().flatten().collect(),
        })
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect()
    }

    pub fn column_dense(&self, v: &SparseVec) -> Vec<Rational> {
        dense_from_sparse(v, self.rows)
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        Ok(())
    }
}
