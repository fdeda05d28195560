use std::fmt;

use crate::error::Error;
use crate::qlinalg::{Rational, Subspace, Vector};
use crate::scalar::{Field, Scalar};

/// A dense row-major matrix.
///
/// As a linear map the matrix sends basis vector `j` of the source to its
/// column `j`, so `rows` is the target dimension and `cols` the source one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S = Rational> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<S>) -> Result<Self, Error> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "matrix data has {} entries, expected {rows}x{cols}",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a `rows x cols.len()` matrix from its columns.
    pub fn from_columns(rows: usize, cols: &[Vector<S>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for i in 0..rows {
                m.data[i * m.cols + j] = col[i].clone();
            }
        }
        m
    }

    pub fn diagonal(entries: &[S]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.data[i * entries.len() + i] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: S) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector<S> {
        Vector((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn columns(&self) -> Vec<Vector<S>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn apply(&self, v: &Vector<S>) -> Vector<S> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        let mut out = Vector::<S>::zeros(self.rows);
        for (j, x) in v.support() {
            for i in 0..self.rows {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out[i] = out[i].clone() + a.clone() * x.clone();
                }
            }
        }
        out
    }

    /// Matrix product `self * rhs`, i.e. the composite map "rhs then self".
    pub fn compose(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::<S>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix<S> {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix sum shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix difference shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| c.clone() * a.clone()).collect(),
        }
    }

    /// Kronecker product; basis `(i, j)` of the source is ordered `i` major.
    pub fn kron(&self, rhs: &Matrix<S>) -> Matrix<S> {
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a.clone() * b.clone());
                        }
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum `self ⊕ rhs`.
    pub fn direct_sum(&self, rhs: &Matrix<S>) -> Matrix<S> {
        let mut out = Matrix::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out.set(self.rows + i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    pub fn map<T: Scalar, F: Fn(&S) -> T>(&self, f: F) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for (c, x) in self.data[r * self.cols..(r + 1) * self.cols]
                .iter()
                .enumerate()
            {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x:?}")?;
            }
        }
        write!(f, "]")
    }
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<S = Rational> {
    pub form: Matrix<S>,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl<S: Field> Matrix<S> {
    /// Reduced row echelon form, its rank and pivot columns.
    pub fn rref(&self) -> Rref<S> {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let idx = row * m.cols + c;
                m.data[idx] = m.data[idx].clone() * inv.clone();
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let pivot_entry = m.get(row, c).clone();
                    if !pivot_entry.is_zero() {
                        let idx = r * m.cols + c;
                        m.data[idx] = m.data[idx].clone() - factor.clone() * pivot_entry;
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        Rref {
            form: m,
            rank: pivot_cols.len(),
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The kernel `{v : self * v = 0}`. The free-variable solutions (one per
    /// non-pivot column, ascending) span it; the stored basis is their
    /// row-reduced form, see [`Subspace`].
    pub fn nullspace(&self) -> Subspace<S> {
        let Rref {
            form, pivot_cols, ..
        } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let basis: Vec<Vector<S>> = free
            .iter()
            .map(|&fc| {
                let mut v = Vector::zeros(self.cols);
                v[fc] = S::one();
                for (r, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = -form.get(r, fc).clone();
                }
                v
            })
            .collect();
        Subspace::span(self.cols, &basis)
    }

    /// The span of the columns.
    pub fn column_space(&self) -> Subspace<S> {
        Subspace::span(self.rows, &self.columns())
    }

    /// One solution of `self * x = rhs`, with free variables set to zero.
    pub fn solve(&self, rhs: &Vector<S>) -> Result<Option<Vector<S>>, Error> {
        if rhs.len() != self.rows {
            return Err(Error::Shape(format!(
                "right-hand side has length {}, matrix has {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let Rref {
            form, pivot_cols, ..
        } = aug.rref();
        if pivot_cols.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = Vector::zeros(self.cols);
        for (r, &pc) in pivot_cols.iter().enumerate() {
            x[pc] = form.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn v(xs: &[i64]) -> Vector<Rational> {
        Vector(xs.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::<Rational>::identity(2);
        let r = id.rref();
        assert_eq!((r.form, r.rank, r.pivot_cols), (id.clone(), 2, vec![0, 1]));

        let r = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(
            (r.form, r.rank, r.pivot_cols),
            (m(&[&[1, 2], &[0, 0]]), 1, vec![0])
        );

        // Swapping rows of the antidiagonal permutation yields the identity.
        let r = m(&[&[0, 1], &[1, 0]]).rref();
        assert_eq!((r.form, r.rank), (id, 2));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(Matrix::<Rational>::zeros(3, 3).nullspace().dim(), 3);
        assert_eq!(Matrix::<Rational>::identity(3).nullspace().dim(), 0);
        let ns = m(&[&[1, 1]]).nullspace();
        assert_eq!(ns.basis(), &[v(&[1, -1])]);
    }

    #[test]
    fn solve_examples() {
        let b = v(&[3, -1]);
        assert_eq!(Matrix::identity(2).solve(&b).unwrap(), Some(b));
        assert_eq!(m(&[&[1, 1]]).solve(&v(&[2])).unwrap(), Some(v(&[2, 0])));
        assert_eq!(m(&[&[0]]).solve(&v(&[1])).unwrap(), None);
        assert!(m(&[&[1, 1]]).solve(&v(&[1, 2])).is_err());
    }

    #[test]
    fn kron_orders_first_factor_major() {
        let a = Matrix::diagonal(&[Rational::from(2), Rational::from(4)]);
        let k = a.kron(&a);
        let diag: Vec<_> = (0..4).map(|i| k.get(i, i).clone()).collect();
        assert_eq!(diag, [4, 8, 8, 16].map(Rational::from).to_vec());
        assert!(k.get(0, 1).is_zero());
    }
}
