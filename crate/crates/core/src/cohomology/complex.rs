use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homcore::{check_multiplicativity, Handedness};
use crate::lmcat::{check_lm_object, check_lm_representation, LmObject, LmRepresentation};
use crate::qlinalg::{quotient_dim, Matrix, Subspace, Vector};

use super::coboundary::{apply_d1, apply_d2};
use super::cochain::{Cochain1, Cochain2, Cochain3, CochainSpace, Dims};

/// How the complex begins below degree one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum D0Strategy {
    /// `D0 = 0`, so `B^1 = 0`.
    Zero,
    /// `D0(w) = (x -> -w.x, m -> -w |> m)`, accepted only when `D1 D0 = 0`
    /// holds on the instance (and, with compatibility on, its image commutes
    /// with the twists).
    NegativeAdjoint,
}

impl fmt::Display for D0Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            D0Strategy::Zero => "zero",
            D0Strategy::NegativeAdjoint => "negative-adjoint",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyDims {
    pub degree: usize,
    pub z: usize,
    pub b: usize,
    pub h: usize,
    /// Set for degree one.
    pub d0: Option<D0Strategy>,
}

/// The complex `C^1 -> C^2 -> C^3` of an object with coefficients in a
/// representation.
pub struct Complex<'a> {
    pub object: &'a LmObject,
    pub rep: &'a LmRepresentation,
    pub compat: bool,
    pub spaces: [CochainSpace; 3],
}

impl<'a> Complex<'a> {
    /// Validates the object, the representation and multiplicativity first.
    pub fn new(o: &'a LmObject, r: &'a LmRepresentation, compat: bool) -> Result<Self> {
        if o.handedness() != Handedness::Left {
            return Err(Error::Shape(
                "the complex is defined for left objects".into(),
            ));
        }
        let mult = check_multiplicativity(&o.algebra);
        if !mult.passed() {
            return Err(Error::NotMultiplicative(mult.to_string()));
        }
        let obj = check_lm_object(o);
        if !obj.passed() {
            return Err(Error::axiom("object", &obj));
        }
        let rep = check_lm_representation(o, r);
        if !rep.passed() {
            return Err(Error::axiom("representation", &rep));
        }
        Self::new_unchecked(o, r, compat)
    }

    /// Builds the complex without validating the structures, for inspecting
    /// what the formulas do on invalid input.
    pub fn new_unchecked(o: &'a LmObject, r: &'a LmRepresentation, compat: bool) -> Result<Self> {
        let spaces = [
            CochainSpace::new(1, o, r, compat)?,
            CochainSpace::new(2, o, r, compat)?,
            CochainSpace::new(3, o, r, compat)?,
        ];
        Ok(Complex {
            object: o,
            rep: r,
            compat,
            spaces,
        })
    }

    pub fn dims(&self) -> Dims {
        Dims::of(self.object, self.rep)
    }

    pub fn space(&self, k: usize) -> Result<&CochainSpace> {
        self.spaces
            .get(k.wrapping_sub(1))
            .ok_or(Error::DegreeOutOfRange(k))
    }

    fn d1_flat(&self, v: &Vector) -> Vector {
        let c: Cochain1 = self.spaces[0].unflatten(v);
        self.spaces[1].flatten(&apply_d1(self.object, self.rep, &c))
    }

    fn d2_flat(&self, v: &Vector) -> Vector {
        let c: Cochain2 = self.spaces[1].unflatten(v);
        let img: Cochain3 = apply_d2(self.object, self.rep, &c);
        self.spaces[2].flatten(&img)
    }

    fn raw(&self, k: usize, f: impl Fn(&Vector) -> Vector + Sync) -> Matrix {
        let src = &self.spaces[k - 1];
        let n = src.raw_dim();
        let cols: Vec<Vector> = (0..n)
            .into_par_iter()
            .map(|i| f(&Vector::basis(n, i)))
            .collect();
        Matrix::from_columns(self.spaces[k].raw_dim(), &cols)
    }

    /// `D1` on all of `C^1`, flat coordinates.
    pub fn d1_raw(&self) -> Matrix {
        self.raw(1, |v| self.d1_flat(v))
    }

    /// `D2` on all of `C^2`, flat coordinates.
    pub fn d2_raw(&self) -> Matrix {
        self.raw(2, |v| self.d2_flat(v))
    }

    fn working(&self, k: usize, f: impl Fn(&Vector) -> Vector + Sync) -> Result<Matrix> {
        let (src, dst) = (&self.spaces[k - 1], &self.spaces[k]);
        let cols: Vec<Result<Vector>> = src
            .basis()
            .par_iter()
            .map(|b| dst.coordinates(&f(b)))
            .collect();
        let cols = cols.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(dst.dim(), &cols))
    }

    /// `D1` in working coordinates: compatible subspaces when enabled, else flat.
    pub fn d1(&self) -> Result<Matrix> {
        self.working(1, |v| self.d1_flat(v))
    }

    pub fn d2(&self) -> Result<Matrix> {
        self.working(2, |v| self.d2_flat(v))
    }

    /// `D2 D1` evaluated on a basis of the working `C^1`, as flat `C^3`
    /// vectors. Needs no assumption that `D1` preserves compatibility.
    pub fn d2_d1_on_working(&self) -> Matrix {
        let cols: Vec<Vector> = self.spaces[0]
            .basis()
            .par_iter()
            .map(|b| self.d2_flat(&self.d1_flat(b)))
            .collect();
        Matrix::from_columns(self.spaces[2].raw_dim(), &cols)
    }

    /// Image of `D0` in working `C^1` coordinates.
    pub fn d0_image(&self, strategy: D0Strategy) -> Result<Vec<Vector>> {
        match strategy {
            D0Strategy::Zero => Ok(Vec::new()),
            D0Strategy::NegativeAdjoint => {
                let (o, r) = (self.object, self.rep);
                let d = self.dims();
                let mut out = Vec::new();
                for i in 0..d.w {
                    let w = Vector::basis(d.w, i);
                    let n0 = Matrix::from_columns(
                        d.w,
                        &(0..d.n)
                            .map(|j| -r.w.act_right(&w, &Vector::basis(d.n, j)))
                            .collect::<Vec<_>>(),
                    );
                    let n1 = Matrix::from_columns(
                        d.v,
                        &(0..d.m)
                            .map(|j| -r.tri_r(&w, &Vector::basis(d.m, j)))
                            .collect::<Vec<_>>(),
                    );
                    let c = Cochain1 { n0, n1 };
                    if !apply_d1(o, r, &c).is_zero() {
                        return Err(Error::DifferentialRejected(format!(
                            "D1 D0 does not vanish on the basis vector {} of W",
                            r.w.space.labels.get(i).cloned().unwrap_or_default()
                        )));
                    }
                    let flat = self.spaces[0].flatten(&c);
                    let coords = self.spaces[0].coordinates(&flat).map_err(|_| {
                        Error::DifferentialRejected(
                            "the image of D0 does not commute with the twists".into(),
                        )
                    })?;
                    out.push(coords);
                }
                Ok(out)
            }
        }
    }

    /// A 1-cochain `b` in the working space with `D1 b = c`, re-verified on
    /// the raw cochains. `None` when `c` is not such an image (including when
    /// `c` leaves the compatible subspace).
    pub fn solve_d1(&self, c: &Cochain2) -> Result<Option<Cochain1>> {
        let (c1, c2) = (&self.spaces[0], &self.spaces[1]);
        let Ok(target) = c2.coordinates(&c2.flatten(c)) else {
            return Ok(None);
        };
        let Some(sol) = self.d1()?.solve(&target)? else {
            return Ok(None);
        };
        let mut flat = Vector::zeros(c1.raw_dim());
        for (coef, bv) in sol.iter().zip(c1.basis()) {
            flat = flat + bv.scale(coef);
        }
        let b: Cochain1 = c1.unflatten(&flat);
        if apply_d1(self.object, self.rep, &b) != *c {
            return Err(Error::NotInSubspace("a solution of D1 b = c failed re-verification".into()));
        }
        Ok(Some(b))
    }

    /// `(dim Z^k, dim B^k, dim H^k)` for `k` in `{1, 2}`.
    pub fn cohomology(&self, k: usize, d0: D0Strategy) -> Result<CohomologyDims> {
        match k {
            1 => {
                let z = self.d1()?.nullspace();
                let b = Subspace::span(self.spaces[0].dim(), &self.d0_image(d0)?);
                let h = quotient_dim(&z, &b)?;
                Ok(CohomologyDims {
                    degree: 1,
                    z: z.dim(),
                    b: b.dim(),
                    h,
                    d0: Some(d0),
                })
            }
            2 => {
                let z = self.d2()?.nullspace();
                let b = self.d1()?.column_space();
                let h = quotient_dim(&z, &b)?;
                Ok(CohomologyDims {
                    degree: 2,
                    z: z.dim(),
                    b: b.dim(),
                    h,
                    d0: None,
                })
            }
            _ => Err(Error::DegreeOutOfRange(k)),
        }
    }
}

/// `(z, b, h)` in degree `k` with compatibility on or off and `D0 = 0`.
pub fn cohomology_dim(
    o: &LmObject,
    r: &LmRepresentation,
    k: usize,
    compat: bool,
) -> Result<CohomologyDims> {
    Complex::new(o, r, compat)?.cohomology(k, D0Strategy::Zero)
}
