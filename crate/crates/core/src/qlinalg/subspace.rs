use crate::error::Error;
use crate::qlinalg::{Matrix, Rational, Vector};
use crate::scalar::Field;

/// A linear subspace of `S^n` held by a canonical basis: the nonzero rows of
/// the reduced row echelon form of any spanning set. Two subspaces are equal
/// exactly when their bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<S = Rational> {
    ambient_dim: usize,
    basis: Vec<Vector<S>>,
}

impl<S: Field> Subspace<S> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| Vector::basis(ambient_dim, i))
                .collect(),
        }
    }

    pub fn span(ambient_dim: usize, vectors: &[Vector<S>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let rows = Matrix::from_rows(vectors.iter().map(|v| v.0.clone()).collect())
            .expect("vectors of equal length");
        assert_eq!(rows.cols(), ambient_dim, "spanning vector has wrong length");
        let r = rows.rref();
        let basis = (0..r.rank)
            .map(|i| Vector(r.form.row(i).to_vec()))
            .collect();
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<S>] {
        &self.basis
    }

    /// The basis as the columns of an `ambient_dim x dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<S> {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }

    /// Coordinates of `v` in the canonical basis, `None` if `v` is outside.
    ///
    /// Each basis vector has a 1 at its pivot where all the others vanish, so
    /// the candidate coordinates are read off at the pivots and then verified.
    pub fn coordinates(&self, v: &Vector<S>) -> Option<Vector<S>> {
        assert_eq!(v.len(), self.ambient_dim, "vector has wrong length");
        let coords: Vec<S> = self
            .basis
            .iter()
            .map(|b| {
                let p = b.support().next().expect("basis vectors are nonzero").0;
                v[p].clone()
            })
            .collect();
        let mut rest = v.clone();
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                rest.axpy(&-c.clone(), b);
            }
        }
        rest.is_zero().then_some(Vector(coords))
    }

    pub fn contains(&self, v: &Vector<S>) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace<S>) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }
}

/// `dim z - dim b`, after checking that `b` lies inside `z`.
pub fn quotient_dim<S: Field>(z: &Subspace<S>, b: &Subspace<S>) -> Result<usize, Error> {
    if !b.is_subspace_of(z) {
        return Err(Error::NotContained);
    }
    Ok(z.dim() - b.dim())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector<Rational> {
        Vector(xs.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn quotient_dim_examples() {
        let z4 = Subspace::<Rational>::full(4);
        assert_eq!(quotient_dim(&z4, &Subspace::zero(4)).unwrap(), 4);
        assert_eq!(quotient_dim(&z4, &z4).unwrap(), 0);
        let z = Subspace::span(4, &[v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0])]);
        let b = Subspace::span(4, &[v(&[1, 1, 1, 0])]);
        assert_eq!(quotient_dim(&z, &b).unwrap(), 2);
        let outside = Subspace::span(4, &[v(&[0, 0, 0, 1])]);
        assert!(matches!(
            quotient_dim(&z, &outside),
            Err(Error::NotContained)
        ));
    }

    #[test]
    fn canonical_basis_does_not_depend_on_spanning_set() {
        let a = Subspace::span(3, &[v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, &[v(&[1, 3, 4]), v(&[2, 5, 7]), v(&[1, 1, 2])]);
        assert_eq!(a, b);
    }
}
