use std::ops::{Add, AddAssign, Index, IndexMut, Neg, Sub, SubAssign};

use crate::qlinalg::Rational;
use crate::scalar::Scalar;

/// A coordinate vector. Arithmetic requires equal lengths and panics
/// otherwise; shape validation happens when structures are built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector<S = Rational>(pub Vec<S>);

impl<S: Scalar> Vector<S> {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![S::zero(); n])
    }

    /// The `i`-th standard basis vector of length `n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = S::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &S) -> Self {
        Vector(self.0.iter().map(|x| c.clone() * x.clone()).collect())
    }

    pub fn iter(&self) -> std::slice::Iter<'_, S> {
        self.0.iter()
    }

    /// Indices and values of the nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, &S)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Concatenation, used for direct sums in block order.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Vector(v)
    }

    pub fn slice(&self, start: usize, len: usize) -> Self {
        Vector(self.0[start..start + len].to_vec())
    }

    pub fn map<T, F: Fn(&S) -> T>(&self, f: F) -> Vector<T> {
        Vector(self.0.iter().map(f).collect())
    }

    pub fn axpy(&mut self, c: &S, x: &Self) {
        assert_eq!(self.len(), x.len(), "vector length mismatch");
        for (a, b) in self.0.iter_mut().zip(&x.0) {
            if !b.is_zero() {
                *a = a.clone() + c.clone() * b.clone();
            }
        }
    }
}

impl<S> From<Vec<S>> for Vector<S> {
    fn from(v: Vec<S>) -> Self {
        Vector(v)
    }
}

impl<S> Index<usize> for Vector<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.0[i]
    }
}

impl<S> IndexMut<usize> for Vector<S> {
    fn index_mut(&mut self, i: usize) -> &mut S {
        &mut self.0[i]
    }
}

impl<S: Scalar> AddAssign<&Vector<S>> for Vector<S> {
    fn add_assign(&mut self, rhs: &Vector<S>) {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            if !b.is_zero() {
                *a = a.clone() + b.clone();
            }
        }
    }
}

impl<S: Scalar> SubAssign<&Vector<S>> for Vector<S> {
    fn sub_assign(&mut self, rhs: &Vector<S>) {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            if !b.is_zero() {
                *a = a.clone() - b.clone();
            }
        }
    }
}

impl<S: Scalar> Add for Vector<S> {
    type Output = Vector<S>;
    fn add(mut self, rhs: Vector<S>) -> Vector<S> {
        self += &rhs;
        self
    }
}

impl<S: Scalar> Sub for Vector<S> {
    type Output = Vector<S>;
    fn sub(mut self, rhs: Vector<S>) -> Vector<S> {
        self -= &rhs;
        self
    }
}

impl<S: Scalar> Neg for Vector<S> {
    type Output = Vector<S>;
    fn neg(self) -> Vector<S> {
        Vector(self.0.into_iter().map(|c| -c).collect())
    }
}
