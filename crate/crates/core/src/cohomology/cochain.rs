use crate::error::{Error, Result};
use crate::lmcat::{LmObject, LmRepresentation};
use crate::qlinalg::{Matrix, Rational, Subspace, Vector};
use crate::scalar::Scalar;
use crate::tensor::Multilinear;

/// Dimensions `(n, m, v, w)` of `g`, `M`, `V`, `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dims {
    pub n: usize,
    pub m: usize,
    pub v: usize,
    pub w: usize,
}

impl Dims {
    pub fn of<S: Scalar>(o: &LmObject<S>, r: &LmRepresentation<S>) -> Self {
        Dims {
            n: o.n(),
            m: o.m(),
            v: r.vdim(),
            w: r.wdim(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    G,
    M,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    V,
    W,
}

/// One graded summand: multilinear maps from the listed slots into a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub name: &'static str,
    pub args: Vec<Slot>,
    pub target: Target,
}

impl Piece {
    fn new(name: &'static str, args: &[Slot], target: Target) -> Self {
        Piece {
            name,
            args: args.to_vec(),
            target,
        }
    }

    pub fn arg_dims(&self, d: Dims) -> Vec<usize> {
        self.args
            .iter()
            .map(|s| if *s == Slot::G { d.n } else { d.m })
            .collect()
    }

    pub fn out_dim(&self, d: Dims) -> usize {
        if self.target == Target::V {
            d.v
        } else {
            d.w
        }
    }

    pub fn len(&self, d: Dims) -> usize {
        self.arg_dims(d).iter().product::<usize>() * self.out_dim(d)
    }
}

/// The summands of `C^k`: the `W`-valued maps on `g`, then the `V`-valued
/// maps with one `M` slot ordered by the position of that slot (leftmost
/// first), then the `W`-valued maps on one factor fewer, likewise.
pub fn layout(k: usize) -> Result<Vec<Piece>> {
    use Slot::{G, M};
    use Target::{V, W};
    Ok(match k {
        1 => vec![Piece::new("n0", &[G], W), Piece::new("n1", &[M], V)],
        2 => vec![
            Piece::new("omega", &[G, G], W),
            Piece::new("nu", &[M, G], V),
            Piece::new("mu", &[G, M], V),
            Piece::new("theta", &[M], W),
        ],
        3 => vec![
            Piece::new("xyz", &[G, G, G], W),
            Piece::new("mxy", &[M, G, G], V),
            Piece::new("xmy", &[G, M, G], V),
            Piece::new("xym", &[G, G, M], V),
            Piece::new("mx", &[M, G], W),
            Piece::new("xm", &[G, M], W),
        ],
        _ => return Err(Error::DegreeOutOfRange(k)),
    })
}

/// A cochain of fixed degree, viewed as its list of summands.
pub trait Cochain<S: Scalar>: Sized {
    const DEGREE: usize;
    fn pieces(&self) -> Vec<Multilinear<S>>;
    fn from_pieces(pieces: Vec<Multilinear<S>>) -> Self;
}

/// `(N0: g -> W, N1: M -> V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain1<S = Rational> {
    pub n0: Matrix<S>,
    pub n1: Matrix<S>,
}

/// `(omega: g g -> W, mu: g M -> V, nu: M g -> V, theta: M -> W)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain2<S = Rational> {
    pub omega: Multilinear<S>,
    pub mu: Multilinear<S>,
    pub nu: Multilinear<S>,
    pub theta: Matrix<S>,
}

/// The six summands of `C^3`, named by argument signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain3<S = Rational> {
    pub xyz: Multilinear<S>,
    pub mxy: Multilinear<S>,
    pub xmy: Multilinear<S>,
    pub xym: Multilinear<S>,
    pub mx: Multilinear<S>,
    pub xm: Multilinear<S>,
}

impl<S: Scalar> Cochain<S> for Cochain1<S> {
    const DEGREE: usize = 1;
    fn pieces(&self) -> Vec<Multilinear<S>> {
        vec![
            Multilinear::from_matrix(&self.n0),
            Multilinear::from_matrix(&self.n1),
        ]
    }
    fn from_pieces(p: Vec<Multilinear<S>>) -> Self {
        Cochain1 {
            n0: p[0].to_matrix(),
            n1: p[1].to_matrix(),
        }
    }
}

impl<S: Scalar> Cochain<S> for Cochain2<S> {
    const DEGREE: usize = 2;
    fn pieces(&self) -> Vec<Multilinear<S>> {
        vec![
            self.omega.clone(),
            self.nu.clone(),
            self.mu.clone(),
            Multilinear::from_matrix(&self.theta),
        ]
    }
    fn from_pieces(mut p: Vec<Multilinear<S>>) -> Self {
        let theta = p.pop().unwrap().to_matrix();
        let mu = p.pop().unwrap();
        let nu = p.pop().unwrap();
        let omega = p.pop().unwrap();
        Cochain2 {
            omega,
            mu,
            nu,
            theta,
        }
    }
}

impl<S: Scalar> Cochain<S> for Cochain3<S> {
    const DEGREE: usize = 3;
    fn pieces(&self) -> Vec<Multilinear<S>> {
        vec![
            self.xyz.clone(),
            self.mxy.clone(),
            self.xmy.clone(),
            self.xym.clone(),
            self.mx.clone(),
            self.xm.clone(),
        ]
    }
    fn from_pieces(p: Vec<Multilinear<S>>) -> Self {
        let mut it = p.into_iter();
        let mut next = || it.next().unwrap();
        Cochain3 {
            xyz: next(),
            mxy: next(),
            xmy: next(),
            xym: next(),
            mx: next(),
            xm: next(),
        }
    }
}

impl<S: Scalar> Cochain1<S> {
    pub fn zero(d: Dims) -> Self {
        Cochain1 {
            n0: Matrix::zeros(d.w, d.n),
            n1: Matrix::zeros(d.v, d.m),
        }
    }
}

impl<S: Scalar> Cochain2<S> {
    pub fn zero(d: Dims) -> Self {
        Cochain2 {
            omega: Multilinear::zeros(&[d.n, d.n], d.w),
            mu: Multilinear::zeros(&[d.n, d.m], d.v),
            nu: Multilinear::zeros(&[d.m, d.n], d.v),
            theta: Matrix::zeros(d.w, d.m),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.pieces().iter().all(Multilinear::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Cochain2 {
            omega: self.omega.add(&other.omega),
            mu: self.mu.add(&other.mu),
            nu: self.nu.add(&other.nu),
            theta: self.theta.add(&other.theta),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Cochain2 {
            omega: self.omega.sub(&other.omega),
            mu: self.mu.sub(&other.mu),
            nu: self.nu.sub(&other.nu),
            theta: self.theta.sub(&other.theta),
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Cochain2<T> {
        Cochain2 {
            omega: self.omega.map(&f),
            mu: self.mu.map(&f),
            nu: self.nu.map(&f),
            theta: self.theta.map(&f),
        }
    }
}

impl<S: Scalar> Cochain3<S> {
    pub fn is_zero(&self) -> bool {
        self.pieces().iter().all(Multilinear::is_zero)
    }
}

/// `C^k` for fixed dimensions: summand layout, flat coordinates and, when
/// requested, the subspace of cochains commuting with the twists.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    pub degree: usize,
    pub dims: Dims,
    pub pieces: Vec<Piece>,
    pub compat: Option<Subspace>,
}

impl CochainSpace {
    /// Layout only; no compatibility subspace.
    pub fn raw(k: usize, dims: Dims) -> Result<Self> {
        Ok(CochainSpace {
            degree: k,
            dims,
            pieces: layout(k)?,
            compat: None,
        })
    }

    pub fn new(k: usize, o: &LmObject, r: &LmRepresentation, compat: bool) -> Result<Self> {
        let mut space = Self::raw(k, Dims::of(o, r))?;
        if compat {
            space.compat = Some(space.compat_subspace(o, r));
        }
        Ok(space)
    }

    pub fn raw_dim(&self) -> usize {
        self.pieces.iter().map(|p| p.len(self.dims)).sum()
    }

    /// Dimension of the working space: the compatible subspace when present.
    pub fn dim(&self) -> usize {
        self.compat.as_ref().map_or(self.raw_dim(), Subspace::dim)
    }

    /// Start of each summand in flat coordinates.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.pieces
            .iter()
            .map(|p| {
                let o = acc;
                acc += p.len(self.dims);
                o
            })
            .collect()
    }

    /// Flat coordinate of `(piece, argument tuple, target coordinate)`.
    pub fn flat_index(&self, piece: usize, tuple: &[usize], coord: usize) -> usize {
        let p = &self.pieces[piece];
        let mut k = 0;
        for (&i, d) in tuple.iter().zip(p.arg_dims(self.dims)) {
            assert!(i < d);
            k = k * d + i;
        }
        self.offsets()[piece] + k * p.out_dim(self.dims) + coord
    }

    pub fn flatten<S: Scalar, C: Cochain<S>>(&self, c: &C) -> Vector<S> {
        assert_eq!(C::DEGREE, self.degree);
        Vector(
            c.pieces()
                .into_iter()
                .flat_map(Multilinear::into_data)
                .collect(),
        )
    }

    pub fn unflatten<S: Scalar, C: Cochain<S>>(&self, v: &Vector<S>) -> C {
        assert_eq!(C::DEGREE, self.degree);
        assert_eq!(v.len(), self.raw_dim(), "flat cochain has wrong length");
        let mut pieces = Vec::new();
        let mut at = 0;
        for p in &self.pieces {
            let len = p.len(self.dims);
            pieces.push(
                Multilinear::from_flat(
                    &p.arg_dims(self.dims),
                    p.out_dim(self.dims),
                    v.0[at..at + len].to_vec(),
                )
                .unwrap(),
            );
            at += len;
        }
        C::from_pieces(pieces)
    }

    /// Basis of the working space as raw flat vectors.
    pub fn basis(&self) -> Vec<Vector> {
        match &self.compat {
            Some(s) => s.basis().to_vec(),
            None => (0..self.raw_dim())
                .map(|i| Vector::basis(self.raw_dim(), i))
                .collect(),
        }
    }

    /// Coordinates of a raw flat vector in the working basis.
    pub fn coordinates(&self, v: &Vector) -> Result<Vector> {
        match &self.compat {
            None => Ok(v.clone()),
            Some(s) => s.coordinates(v).ok_or_else(|| {
                Error::NotInSubspace(format!(
                    "a degree-{} cochain does not commute with the twists",
                    self.degree
                ))
            }),
        }
    }

    /// Kernel of `c -> alpha_target c - c alpha^(x)`, summand by summand.
    fn compat_subspace(&self, o: &LmObject, r: &LmRepresentation) -> Subspace {
        let d = self.dims;
        let mut gens = Vec::new();
        let offsets = self.offsets();
        for (p, &off) in self.pieces.iter().zip(&offsets) {
            let twists: Vec<&Matrix> = p
                .args
                .iter()
                .map(|s| {
                    if *s == Slot::G {
                        o.algebra.alpha()
                    } else {
                        &o.module.space.twist
                    }
                })
                .collect();
            let target = if p.target == Target::V {
                &r.v.space.twist
            } else {
                &r.w.space.twist
            };
            let len = p.len(d);
            let cols: Vec<Vector> = (0..len)
                .map(|i| {
                    let c = Multilinear::from_flat(
                        &p.arg_dims(d),
                        p.out_dim(d),
                        Vector::<Rational>::basis(len, i).0,
                    )
                    .unwrap();
                    Vector(
                        c.post_compose(target)
                            .sub(&c.pre_compose(&twists))
                            .into_data(),
                    )
                })
                .collect();
            let op = Matrix::from_columns(len, &cols);
            for b in op.nullspace().basis() {
                let mut full = Vector::zeros(self.raw_dim());
                for (i, x) in b.iter().enumerate() {
                    full[off + i] = x.clone();
                }
                gens.push(full);
            }
        }
        Subspace::span(self.raw_dim(), &gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn raw_dimension_formulas() {
        for (n, m, v, w) in [(1, 1, 1, 1), (2, 1, 1, 2), (3, 2, 4, 1), (2, 4, 4, 2)] {
            let d = Dims { n, m, v, w };
            assert_eq!(
                CochainSpace::raw(2, d).unwrap().raw_dim(),
                n * n * w + 2 * n * m * v + m * w
            );
            assert_eq!(
                CochainSpace::raw(3, d).unwrap().raw_dim(),
                n * n * n * w + 3 * n * n * m * v + 2 * n * m * w
            );
        }
        let d = Dims {
            n: 2,
            m: 1,
            v: 1,
            w: 2,
        };
        assert_eq!(CochainSpace::raw(2, d).unwrap().raw_dim(), 14);
        assert!(matches!(
            CochainSpace::raw(4, d),
            Err(Error::DegreeOutOfRange(4))
        ));
    }

    #[test]
    fn flat_index_orders_pieces_then_row_major() {
        let d = Dims {
            n: 2,
            m: 1,
            v: 1,
            w: 2,
        };
        let s = CochainSpace::raw(2, d).unwrap();
        assert_eq!(s.flat_index(0, &[0, 0], 0), 0);
        assert_eq!(s.flat_index(0, &[1, 1], 1), 7);
        assert_eq!(s.flat_index(1, &[0, 1], 0), 9);
        assert_eq!(s.flat_index(3, &[0], 1), 13);
    }

    #[test]
    fn flatten_round_trips() {
        let d = Dims {
            n: 2,
            m: 1,
            v: 1,
            w: 2,
        };
        let s = CochainSpace::raw(2, d).unwrap();
        let v = Vector((0..14).map(|i| Rational::from(i as i64)).collect());
        let c: Cochain2 = s.unflatten(&v);
        assert_eq!(c.theta.get(1, 0), &Rational::from(13));
        assert_eq!(s.flatten(&c), v);
    }
}
