//! Hom-vector spaces, Hom-Leibniz algebras, bimodules and their axioms.

use std::fmt;

use crate::error::{Error, Result};
use crate::qlinalg::{Matrix, Rational, Vector};
use crate::report::{run, CheckReport, Residual};
use crate::scalar::Scalar;
use crate::tensor::Multilinear;

/// A vector space with a named basis and a twist map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace<S = Rational> {
    pub labels: Vec<String>,
    pub twist: Matrix<S>,
}

impl<S: Scalar> HomSpace<S> {
    pub fn new(labels: Vec<String>, twist: Matrix<S>) -> Result<Self> {
        if !twist.is_square() || twist.rows() != labels.len() {
            return Err(Error::Shape(format!(
                "twist is {}x{} but the space has {} basis labels",
                twist.rows(),
                twist.cols(),
                labels.len()
            )));
        }
        Ok(HomSpace { labels, twist })
    }

    /// Basis `prefix1, prefix2, ...` and the given twist.
    pub fn with_twist(prefix: &str, twist: Matrix<S>) -> Self {
        let labels = default_labels(prefix, twist.rows());
        HomSpace::new(labels, twist).expect("square twist")
    }

    pub fn identity(prefix: &str, dim: usize) -> Self {
        Self::with_twist(prefix, Matrix::identity(dim))
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        HomSpace {
            labels,
            twist: self.twist.direct_sum(&other.twist),
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> HomSpace<T> {
        HomSpace {
            labels: self.labels.clone(),
            twist: self.twist.map(f),
        }
    }
}

pub fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Handedness {
    Left,
    Right,
}

impl Handedness {
    pub fn flip(self) -> Self {
        match self {
            Handedness::Left => Handedness::Right,
            Handedness::Right => Handedness::Left,
        }
    }
}

impl fmt::Display for Handedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Handedness::Left => "left",
            Handedness::Right => "right",
        })
    }
}

/// `(g, alpha)` with product `e_i e_j = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra<S = Rational> {
    pub space: HomSpace<S>,
    pub product: Multilinear<S>,
    pub handedness: Handedness,
}

impl<S: Scalar> HomAlgebra<S> {
    pub fn new(
        space: HomSpace<S>,
        product: Multilinear<S>,
        handedness: Handedness,
    ) -> Result<Self> {
        let n = space.dim();
        if product.arg_dims() != [n, n] || product.out_dim() != n {
            return Err(Error::Shape(format!(
                "product has shape {:?} -> {} but the algebra has dimension {n}",
                product.arg_dims(),
                product.out_dim()
            )));
        }
        Ok(HomAlgebra {
            space,
            product,
            handedness,
        })
    }

    /// The algebra with all products zero.
    pub fn abelian(space: HomSpace<S>, handedness: Handedness) -> Self {
        let n = space.dim();
        HomAlgebra {
            space,
            product: Multilinear::zeros(&[n, n], n),
            handedness,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn alpha(&self) -> &Matrix<S> {
        &self.space.twist
    }

    pub fn twist(&self, x: &Vector<S>) -> Vector<S> {
        self.space.twist.apply(x)
    }

    pub fn mul(&self, x: &Vector<S>, y: &Vector<S>) -> Vector<S> {
        self.product.apply(&[x, y])
    }

    pub fn basis(&self, i: usize) -> Vector<S> {
        Vector::basis(self.dim(), i)
    }

    /// Product transposed; a left algebra becomes a right one and back.
    pub fn opposite(&self) -> Self {
        HomAlgebra {
            space: self.space.clone(),
            product: self.product.transpose_args(),
            handedness: self.handedness.flip(),
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> HomAlgebra<T> {
        HomAlgebra {
            space: self.space.map(&f),
            product: self.product.map(&f),
            handedness: self.handedness,
        }
    }
}

/// `(M, alpha_M)` with a left action `g x M -> M` and a right action `M x g -> M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule<S = Rational> {
    pub space: HomSpace<S>,
    pub left: Multilinear<S>,
    pub right: Multilinear<S>,
}

impl<S: Scalar> Bimodule<S> {
    pub fn new(space: HomSpace<S>, left: Multilinear<S>, right: Multilinear<S>) -> Result<Self> {
        let m = space.dim();
        let n = left.arg_dims().first().copied().unwrap_or(0);
        if left.arg_dims() != [n, m]
            || left.out_dim() != m
            || right.arg_dims() != [m, n]
            || right.out_dim() != m
        {
            return Err(Error::Shape(format!(
                "actions of shapes {:?} and {:?} do not fit a module of dimension {m}",
                left.arg_dims(),
                right.arg_dims()
            )));
        }
        Ok(Bimodule { space, left, right })
    }

    /// Both actions zero.
    pub fn trivial(space: HomSpace<S>, algebra_dim: usize) -> Self {
        let m = space.dim();
        Bimodule {
            space,
            left: Multilinear::zeros(&[algebra_dim, m], m),
            right: Multilinear::zeros(&[m, algebra_dim], m),
        }
    }

    /// The algebra acting on itself by its product.
    pub fn adjoint(a: &HomAlgebra<S>) -> Self {
        Bimodule {
            space: a.space.clone(),
            left: a.product.clone(),
            right: a.product.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn algebra_dim(&self) -> usize {
        self.left.arg_dims()[0]
    }

    pub fn twist(&self, m: &Vector<S>) -> Vector<S> {
        self.space.twist.apply(m)
    }

    pub fn act_left(&self, x: &Vector<S>, m: &Vector<S>) -> Vector<S> {
        self.left.apply(&[x, m])
    }

    pub fn act_right(&self, m: &Vector<S>, x: &Vector<S>) -> Vector<S> {
        self.right.apply(&[m, x])
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Bimodule<T> {
        Bimodule {
            space: self.space.map(&f),
            left: self.left.map(&f),
            right: self.right.map(&f),
        }
    }
}

fn basis<S: Scalar>(n: usize, i: usize) -> Vector<S> {
    Vector::basis(n, i)
}

pub fn left_leibniz_residual<S: Scalar>(a: &HomAlgebra<S>) -> Residual<'_, S> {
    let n = a.dim();
    Residual::new("left-leibniz", &[n, n, n], move |t| {
        let (x, y, z) = (basis(n, t[0]), basis(n, t[1]), basis(n, t[2]));
        a.mul(&a.twist(&x), &a.mul(&y, &z))
            - a.mul(&a.mul(&x, &y), &a.twist(&z))
            - a.mul(&a.twist(&y), &a.mul(&x, &z))
    })
}

pub fn right_leibniz_residual<S: Scalar>(a: &HomAlgebra<S>) -> Residual<'_, S> {
    let n = a.dim();
    Residual::new("right-leibniz", &[n, n, n], move |t| {
        let (x, y, z) = (basis(n, t[0]), basis(n, t[1]), basis(n, t[2]));
        a.mul(&a.mul(&x, &y), &a.twist(&z))
            - a.mul(&a.mul(&x, &z), &a.twist(&y))
            - a.mul(&a.twist(&x), &a.mul(&y, &z))
    })
}

/// The Leibniz identity matching the algebra's handedness.
pub fn leibniz_residual<S: Scalar>(a: &HomAlgebra<S>) -> Residual<'_, S> {
    match a.handedness {
        Handedness::Left => left_leibniz_residual(a),
        Handedness::Right => right_leibniz_residual(a),
    }
}

pub fn multiplicativity_residual<S: Scalar>(a: &HomAlgebra<S>) -> Residual<'_, S> {
    let n = a.dim();
    Residual::new("multiplicativity", &[n, n], move |t| {
        let (x, y) = (basis(n, t[0]), basis(n, t[1]));
        a.twist(&a.mul(&x, &y)) - a.mul(&a.twist(&x), &a.twist(&y))
    })
}

pub fn check_left_hom_leibniz<S: Scalar>(a: &HomAlgebra<S>) -> CheckReport<S> {
    run(&[left_leibniz_residual(a)])
}

pub fn check_right_hom_leibniz<S: Scalar>(a: &HomAlgebra<S>) -> CheckReport<S> {
    run(&[right_leibniz_residual(a)])
}

/// The identity for the algebra's own handedness.
pub fn check_algebra<S: Scalar>(a: &HomAlgebra<S>) -> CheckReport<S> {
    run(&[leibniz_residual(a)])
}

pub fn check_multiplicativity<S: Scalar>(a: &HomAlgebra<S>) -> CheckReport<S> {
    run(&[multiplicativity_residual(a)])
}

pub fn bimodule_residuals<'a, S: Scalar>(
    a: &'a HomAlgebra<S>,
    b: &'a Bimodule<S>,
) -> Vec<Residual<'a, S>> {
    let n = a.dim();
    let m = b.dim();
    let g = move |i: usize| basis::<S>(n, i);
    let e = move |i: usize| basis::<S>(m, i);
    let mut out = vec![
        Residual::new("twist-left", &[n, m], move |t| {
            let (x, v) = (g(t[0]), e(t[1]));
            b.twist(&b.act_left(&x, &v)) - b.act_left(&a.twist(&x), &b.twist(&v))
        }),
        Residual::new("twist-right", &[m, n], move |t| {
            let (v, x) = (e(t[0]), g(t[1]));
            b.twist(&b.act_right(&v, &x)) - b.act_right(&b.twist(&v), &a.twist(&x))
        }),
    ];
    match a.handedness {
        Handedness::Left => {
            out.push(Residual::new("L1", &[n, n, m], move |t| {
                let (x, y, v) = (g(t[0]), g(t[1]), e(t[2]));
                b.act_left(&a.twist(&x), &b.act_left(&y, &v))
                    - b.act_left(&a.mul(&x, &y), &b.twist(&v))
                    - b.act_left(&a.twist(&y), &b.act_left(&x, &v))
            }));
            out.push(Residual::new("L2", &[m, n, n], move |t| {
                let (v, x, y) = (e(t[0]), g(t[1]), g(t[2]));
                b.act_right(&b.twist(&v), &a.mul(&x, &y))
                    - b.act_right(&b.act_right(&v, &x), &a.twist(&y))
                    - b.act_left(&a.twist(&x), &b.act_right(&v, &y))
            }));
            out.push(Residual::new("L3", &[n, m, n], move |t| {
                let (x, v, y) = (g(t[0]), e(t[1]), g(t[2]));
                b.act_left(&a.twist(&x), &b.act_right(&v, &y))
                    - b.act_right(&b.act_left(&x, &v), &a.twist(&y))
                    - b.act_right(&b.twist(&v), &a.mul(&x, &y))
            }));
        }
        Handedness::Right => {
            out.push(Residual::new("R1", &[m, n, n], move |t| {
                let (v, x, y) = (e(t[0]), g(t[1]), g(t[2]));
                b.act_right(&b.act_right(&v, &x), &a.twist(&y))
                    - b.act_right(&b.twist(&v), &a.mul(&x, &y))
                    - b.act_right(&b.act_right(&v, &y), &a.twist(&x))
            }));
            out.push(Residual::new("R2", &[n, m, n], move |t| {
                let (x, v, y) = (g(t[0]), e(t[1]), g(t[2]));
                b.act_right(&b.act_left(&x, &v), &a.twist(&y))
                    - b.act_left(&a.twist(&x), &b.act_right(&v, &y))
                    - b.act_left(&a.mul(&x, &y), &b.twist(&v))
            }));
            out.push(Residual::new("R3", &[n, n, m], move |t| {
                let (x, y, v) = (g(t[0]), g(t[1]), e(t[2]));
                b.act_left(&a.mul(&x, &y), &b.twist(&v))
                    - b.act_left(&a.twist(&x), &b.act_left(&y, &v))
                    - b.act_right(&b.act_left(&x, &v), &a.twist(&y))
            }));
        }
    }
    out
}

pub fn check_bimodule<S: Scalar>(a: &HomAlgebra<S>, b: &Bimodule<S>) -> CheckReport<S> {
    if let Err(e) = shapes_agree(a, b) {
        panic!("{e}");
    }
    run(&bimodule_residuals(a, b))
}

pub(crate) fn shapes_agree<S: Scalar>(a: &HomAlgebra<S>, b: &Bimodule<S>) -> Result<()> {
    if b.algebra_dim() != a.dim() {
        return Err(Error::Shape(format!(
            "bimodule is over an algebra of dimension {} but the algebra has dimension {}",
            b.algebra_dim(),
            a.dim()
        )));
    }
    Ok(())
}

/// `g + M` with `(x,m)(y,n) = (xy, x.n + m.y)` and twist `alpha + alpha_M`,
/// basis `g` first.
pub fn semidirect_product<S: Scalar>(a: &HomAlgebra<S>, b: &Bimodule<S>) -> Result<HomAlgebra<S>> {
    shapes_agree(a, b)?;
    let report = check_bimodule(a, b);
    if !report.passed() {
        return Err(Error::axiom("bimodule", &report));
    }
    Ok(semidirect_unchecked(a, b))
}

pub(crate) fn semidirect_unchecked<S: Scalar>(a: &HomAlgebra<S>, b: &Bimodule<S>) -> HomAlgebra<S> {
    let (n, m) = (a.dim(), b.dim());
    let product = Multilinear::from_fn(&[n + m, n + m], n + m, |t| {
        let (x, u) = split(&basis::<S>(n + m, t[0]), n);
        let (y, v) = split(&basis::<S>(n + m, t[1]), n);
        a.mul(&x, &y)
            .concat(&(b.act_left(&x, &v) + b.act_right(&u, &y)))
    });
    HomAlgebra {
        space: a.space.direct_sum(&b.space),
        product,
        handedness: a.handedness,
    }
}

/// Splits a direct-sum vector after the first `n` coordinates.
pub fn split<S: Scalar>(v: &Vector<S>, n: usize) -> (Vector<S>, Vector<S>) {
    (v.slice(0, n), v.slice(n, v.len() - n))
}

/// Whether `e(xy) = e(x)e(y)` on basis pairs.
pub fn endomorphism_residual<'a, S: Scalar>(
    a: &'a HomAlgebra<S>,
    endo: &'a Matrix<S>,
) -> Residual<'a, S> {
    let n = a.dim();
    Residual::new("endomorphism", &[n, n], move |t| {
        let (x, y) = (basis(n, t[0]), basis(n, t[1]));
        endo.apply(&a.mul(&x, &y)) - a.mul(&endo.apply(&x), &endo.apply(&y))
    })
}

/// Twists an untwisted algebra along an endomorphism: product `e(xy)`, twist `e`.
pub fn yau_twist<S: Scalar>(a: &HomAlgebra<S>, endo: &Matrix<S>) -> Result<HomAlgebra<S>> {
    let n = a.dim();
    if endo.rows() != n || endo.cols() != n {
        return Err(Error::Shape(format!("endomorphism must be {n}x{n}")));
    }
    if *a.alpha() != Matrix::identity(n) {
        return Err(Error::Shape(
            "a Yau twist needs an algebra with identity twist".into(),
        ));
    }
    if !endomorphism_residual(a, endo).check().passed {
        return Err(Error::NotEndomorphism);
    }
    Ok(HomAlgebra {
        space: HomSpace {
            labels: a.space.labels.clone(),
            twist: endo.clone(),
        },
        product: a.product.post_compose(endo),
        handedness: a.handedness,
    })
}

/// Residuals of a Hom-Leibniz algebra homomorphism `phi: a -> b`.
pub fn homomorphism_residuals<'a, S: Scalar>(
    a: &'a HomAlgebra<S>,
    b: &'a HomAlgebra<S>,
    phi: &'a Matrix<S>,
) -> Vec<Residual<'a, S>> {
    let n = a.dim();
    vec![
        Residual::new("hom-twist", &[n], move |t| {
            let x = basis(n, t[0]);
            phi.apply(&a.twist(&x)) - b.twist(&phi.apply(&x))
        }),
        Residual::new("hom-product", &[n, n], move |t| {
            let (x, y) = (basis(n, t[0]), basis(n, t[1]));
            phi.apply(&a.mul(&x, &y)) - b.mul(&phi.apply(&x), &phi.apply(&y))
        }),
    ]
}
