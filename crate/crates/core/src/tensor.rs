//! Dense multilinear maps stored by structure constants.

use crate::error::{Error, Result};
use crate::qlinalg::{Matrix, Rational, Vector};
use crate::scalar::Scalar;

/// A multilinear map `S^{d_1} x ... x S^{d_k} -> S^{out}`.
///
/// Entries are stored row-major over the argument indices with the output
/// coordinate last, so `data[((i_1 * d_2 + i_2) ... ) * out + c]` is the
/// `c`-th coordinate of the image of the basis tuple `(e_{i_1}, ..., e_{i_k})`.
/// The same flattening is used for cochain coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multilinear<S = Rational> {
    arg_dims: Vec<usize>,
    out_dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> Multilinear<S> {
    pub fn zeros(arg_dims: &[usize], out_dim: usize) -> Self {
        let len = arg_dims.iter().product::<usize>() * out_dim;
        Multilinear {
            arg_dims: arg_dims.to_vec(),
            out_dim,
            data: vec![S::zero(); len],
        }
    }

    pub fn from_flat(arg_dims: &[usize], out_dim: usize, data: Vec<S>) -> Result<Self> {
        let len = arg_dims.iter().product::<usize>() * out_dim;
        if data.len() != len {
            return Err(Error::Shape(format!(
                "multilinear map {arg_dims:?} -> {out_dim} needs {len} entries, got {}",
                data.len()
            )));
        }
        Ok(Multilinear {
            arg_dims: arg_dims.to_vec(),
            out_dim,
            data,
        })
    }

    /// Builds the map from its values on basis tuples.
    pub fn from_fn<F>(arg_dims: &[usize], out_dim: usize, mut f: F) -> Self
    where
        F: FnMut(&[usize]) -> Vector<S>,
    {
        let mut t = Self::zeros(arg_dims, out_dim);
        for (k, idx) in tuples(arg_dims).enumerate() {
            let v = f(&idx);
            assert_eq!(v.len(), out_dim, "value has wrong length at {idx:?}");
            t.data[k * out_dim..(k + 1) * out_dim].clone_from_slice(&v.0);
        }
        t
    }

    /// A linear map viewed as a one-argument multilinear map.
    pub fn from_matrix(m: &Matrix<S>) -> Self {
        Self::from_fn(&[m.cols()], m.rows(), |i| m.column(i[0]))
    }

    pub fn to_matrix(&self) -> Matrix<S> {
        assert_eq!(self.arity(), 1, "only unary maps are matrices");
        Matrix::from_columns(
            self.out_dim,
            &(0..self.arg_dims[0])
                .map(|i| self.get(&[i]))
                .collect::<Vec<_>>(),
        )
    }

    pub fn arg_dims(&self) -> &[usize] {
        &self.arg_dims
    }

    pub fn arity(&self) -> usize {
        self.arg_dims.len()
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn into_data(self) -> Vec<S> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.arg_dims.len());
        let mut k = 0;
        for (&i, &d) in idx.iter().zip(&self.arg_dims) {
            debug_assert!(i < d);
            k = k * d + i;
        }
        k * self.out_dim
    }

    /// Image of a basis tuple.
    pub fn get(&self, idx: &[usize]) -> Vector<S> {
        let o = self.offset(idx);
        Vector(self.data[o..o + self.out_dim].to_vec())
    }

    pub fn set(&mut self, idx: &[usize], v: &Vector<S>) {
        assert_eq!(v.len(), self.out_dim);
        let o = self.offset(idx);
        self.data[o..o + self.out_dim].clone_from_slice(&v.0);
    }

    /// Evaluates on arbitrary vectors, skipping zero coordinates.
    pub fn apply(&self, args: &[&Vector<S>]) -> Vector<S> {
        assert_eq!(args.len(), self.arity(), "wrong number of arguments");
        for (a, &d) in args.iter().zip(&self.arg_dims) {
            assert_eq!(a.len(), d, "argument has wrong length");
        }
        let mut out = Vector::zeros(self.out_dim);
        let mut idx = vec![0; self.arity()];
        self.accumulate(args, 0, S::one(), &mut idx, &mut out);
        out
    }

    fn accumulate(
        &self,
        args: &[&Vector<S>],
        pos: usize,
        coeff: S,
        idx: &mut [usize],
        out: &mut Vector<S>,
    ) {
        if pos == args.len() {
            let o = self.offset(idx);
            for (c, x) in out.0.iter_mut().zip(&self.data[o..o + self.out_dim]) {
                if !x.is_zero() {
                    *c = c.clone() + coeff.clone() * x.clone();
                }
            }
            return;
        }
        for (i, a) in args[pos].support() {
            idx[pos] = i;
            self.accumulate(args, pos + 1, coeff.clone() * a.clone(), idx, out);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Multilinear {
            arg_dims: self.arg_dims.clone(),
            out_dim: self.out_dim,
            data: self.data.iter().map(|x| c.clone() * x.clone()).collect(),
        }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        assert_eq!(self.arg_dims, rhs.arg_dims, "multilinear shape mismatch");
        assert_eq!(self.out_dim, rhs.out_dim, "multilinear shape mismatch");
        Multilinear {
            arg_dims: self.arg_dims.clone(),
            out_dim: self.out_dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// `m` applied after the map.
    pub fn post_compose(&self, m: &Matrix<S>) -> Self {
        assert_eq!(m.cols(), self.out_dim);
        Self::from_fn(&self.arg_dims, m.rows(), |idx| m.apply(&self.get(idx)))
    }

    /// The map precomposed with one linear map per argument.
    pub fn pre_compose(&self, ms: &[&Matrix<S>]) -> Self {
        assert_eq!(ms.len(), self.arity());
        let dims: Vec<usize> = ms.iter().map(|m| m.cols()).collect();
        Self::from_fn(&dims, self.out_dim, |idx| {
            let cols: Vec<Vector<S>> = ms.iter().zip(idx).map(|(m, &i)| m.column(i)).collect();
            let refs: Vec<&Vector<S>> = cols.iter().collect();
            self.apply(&refs)
        })
    }

    /// Swaps the two arguments of a bilinear map.
    pub fn transpose_args(&self) -> Self {
        assert_eq!(self.arity(), 2, "only bilinear maps can be transposed");
        let dims = [self.arg_dims[1], self.arg_dims[0]];
        Self::from_fn(&dims, self.out_dim, |idx| self.get(&[idx[1], idx[0]]))
    }

    pub fn map<T: Scalar, F: Fn(&S) -> T>(&self, f: F) -> Multilinear<T> {
        Multilinear {
            arg_dims: self.arg_dims.clone(),
            out_dim: self.out_dim,
            data: self.data.iter().map(f).collect(),
        }
    }
}

/// All index tuples with `0 <= t_i < dims[i]`, in lexicographic order.
pub fn tuples(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    (0..total).map(move |mut k| {
        let mut idx = vec![0; dims.len()];
        for p in (0..dims.len()).rev() {
            idx[p] = k % dims[p];
            k /= dims[p];
        }
        idx
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::Rational;

    fn v(xs: &[i64]) -> Vector<Rational> {
        Vector(xs.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn tuples_are_lexicographic() {
        let all: Vec<_> = tuples(&[2, 3]).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[3], vec![1, 0]);
        assert_eq!(tuples(&[]).count(), 1);
        assert_eq!(tuples(&[2, 0]).count(), 0);
    }

    #[test]
    fn apply_is_bilinear() {
        // e1 e1 = e2
        let mut t = Multilinear::<Rational>::zeros(&[2, 2], 2);
        t.set(&[0, 0], &v(&[0, 1]));
        t.set(&[1, 0], &v(&[3, 0]));
        assert_eq!(t.apply(&[&v(&[2, 1]), &v(&[5, 7])]), v(&[15, 10]));
        assert_eq!(t.get(&[0, 0]), v(&[0, 1]));
    }

    #[test]
    fn transpose_and_compose() {
        let t = Multilinear::from_fn(&[2, 3], 1, |i| v(&[(10 * i[0] + i[1]) as i64]));
        let s = t.transpose_args();
        assert_eq!(s.get(&[2, 1]), v(&[12]));
        assert_eq!(s.transpose_args(), t);
        let m = Matrix::from_rows(vec![vec![Rational::from(2)]]).unwrap();
        assert_eq!(t.post_compose(&m).get(&[1, 2]), v(&[24]));
    }
}
