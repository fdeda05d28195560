//! Dialgebras: one Hom-vector space with two products `-|` and `|-`.
//!
//! Names follow the identities they check. The admissible family shares its
//! first two evaluators with the one-sided families (`D1` is `DL1`, `D2` is
//! `DR1`), so the verdicts agree by construction.

use crate::error::{Error, Result};
use crate::homcore::{
    left_leibniz_residual, right_leibniz_residual, Handedness, HomAlgebra, HomSpace,
};
use crate::lmcat::{check_lm_object, LmObject};
use crate::qlinalg::{Rational, Vector};
use crate::report::{run, CheckItem, CheckReport, Residual};
use crate::scalar::Scalar;
use crate::tensor::Multilinear;

/// `(D, alpha)` with `left` holding `x -| y` and `right` holding `x |- y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dialgebra<S = Rational> {
    pub space: HomSpace<S>,
    pub left: Multilinear<S>,
    pub right: Multilinear<S>,
}

impl<S: Scalar> Dialgebra<S> {
    pub fn new(space: HomSpace<S>, left: Multilinear<S>, right: Multilinear<S>) -> Result<Self> {
        let n = space.dim();
        for (name, t) in [("-|", &left), ("|-", &right)] {
            if t.arg_dims() != [n, n] || t.out_dim() != n {
                return Err(Error::Shape(format!(
                    "{name} has shape {:?} -> {} but the space has dimension {n}",
                    t.arg_dims(),
                    t.out_dim()
                )));
            }
        }
        Ok(Dialgebra { space, left, right })
    }

    pub fn zero(space: HomSpace<S>) -> Self {
        let n = space.dim();
        Dialgebra {
            space,
            left: Multilinear::zeros(&[n, n], n),
            right: Multilinear::zeros(&[n, n], n),
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn twist(&self, x: &Vector<S>) -> Vector<S> {
        self.space.twist.apply(x)
    }

    /// `x -| y`
    pub fn dashv(&self, x: &Vector<S>, y: &Vector<S>) -> Vector<S> {
        self.left.apply(&[x, y])
    }

    /// `x |- y`
    pub fn vdash(&self, x: &Vector<S>, y: &Vector<S>) -> Vector<S> {
        self.right.apply(&[x, y])
    }

    /// `(D, |-)` as a left algebra.
    pub fn vdash_algebra(&self) -> HomAlgebra<S> {
        HomAlgebra {
            space: self.space.clone(),
            product: self.right.clone(),
            handedness: Handedness::Left,
        }
    }

    /// `(D, -|)` as a right algebra.
    pub fn dashv_algebra(&self) -> HomAlgebra<S> {
        HomAlgebra {
            space: self.space.clone(),
            product: self.left.clone(),
            handedness: Handedness::Right,
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Dialgebra<T> {
        Dialgebra {
            space: self.space.map(&f),
            left: self.left.map(&f),
            right: self.right.map(&f),
        }
    }
}

type Eval<S> = fn(&Dialgebra<S>, &Vector<S>, &Vector<S>, &Vector<S>) -> Vector<S>;

fn family<'a, S: Scalar>(d: &'a Dialgebra<S>, name: &str, eval: Eval<S>) -> Residual<'a, S> {
    let n = d.dim();
    Residual::new(name, &[n, n, n], move |t| {
        let (x, y, z) = (
            Vector::basis(n, t[0]),
            Vector::basis(n, t[1]),
            Vector::basis(n, t[2]),
        );
        eval(d, &x, &y, &z)
    })
}

// a(x) |- (y -| z) = (x |- y) -| a(z) + a(y) -| (x |- z)
fn eq_d1<S: Scalar>(d: &Dialgebra<S>, x: &Vector<S>, y: &Vector<S>, z: &Vector<S>) -> Vector<S> {
    d.vdash(&d.twist(x), &d.dashv(y, z))
        - d.dashv(&d.vdash(x, y), &d.twist(z))
        - d.dashv(&d.twist(y), &d.vdash(x, z))
}

// (x |- y) -| a(z) = a(x) |- (y -| z) + (x -| z) |- a(y)
fn eq_d2<S: Scalar>(d: &Dialgebra<S>, x: &Vector<S>, y: &Vector<S>, z: &Vector<S>) -> Vector<S> {
    d.dashv(&d.vdash(x, y), &d.twist(z))
        - d.vdash(&d.twist(x), &d.dashv(y, z))
        - d.vdash(&d.dashv(x, z), &d.twist(y))
}

// a(x) |- (y |- z) = (x -| y) |- a(z) + a(y) |- (x |- z)
fn eq_dl2<S: Scalar>(d: &Dialgebra<S>, x: &Vector<S>, y: &Vector<S>, z: &Vector<S>) -> Vector<S> {
    d.vdash(&d.twist(x), &d.vdash(y, z))
        - d.vdash(&d.dashv(x, y), &d.twist(z))
        - d.vdash(&d.twist(y), &d.vdash(x, z))
}

// a(x) -| (y |- z) = (x -| y) -| a(z) + a(y) |- (x -| z)
fn eq_dl3<S: Scalar>(d: &Dialgebra<S>, x: &Vector<S>, y: &Vector<S>, z: &Vector<S>) -> Vector<S> {
    d.dashv(&d.twist(x), &d.vdash(y, z))
        - d.dashv(&d.dashv(x, y), &d.twist(z))
        - d.vdash(&d.twist(y), &d.dashv(x, z))
}

// (x -| y) -| a(z) = a(x) -| (y |- z) + (x -| z) -| a(y)
fn eq_dr2<S: Scalar>(d: &Dialgebra<S>, x: &Vector<S>, y: &Vector<S>, z: &Vector<S>) -> Vector<S> {
    d.dashv(&d.dashv(x, y), &d.twist(z))
        - d.dashv(&d.twist(x), &d.vdash(y, z))
        - d.dashv(&d.dashv(x, z), &d.twist(y))
}

// (x -| y) |- a(z) = a(x) |- (y |- z) + (x |- z) -| a(y)
fn eq_dr3<S: Scalar>(d: &Dialgebra<S>, x: &Vector<S>, y: &Vector<S>, z: &Vector<S>) -> Vector<S> {
    d.vdash(&d.dashv(x, y), &d.twist(z))
        - d.vdash(&d.twist(x), &d.vdash(y, z))
        - d.dashv(&d.vdash(x, z), &d.twist(y))
}

/// Twist multiplicativity over both products, reported as advisories.
fn multiplicativity_advisories<S: Scalar>(d: &Dialgebra<S>) -> Vec<CheckItem<S>> {
    let n = d.dim();
    let mk = |name: &str, p: fn(&Dialgebra<S>, &Vector<S>, &Vector<S>) -> Vector<S>| {
        Residual::new(name, &[n, n], move |t| {
            let (x, y) = (Vector::basis(n, t[0]), Vector::basis(n, t[1]));
            d.twist(&p(d, &x, &y)) - p(d, &d.twist(&x), &d.twist(&y))
        })
        .check()
    };
    vec![
        mk("multiplicativity-dashv", Dialgebra::dashv),
        mk("multiplicativity-vdash", Dialgebra::vdash),
    ]
}

fn renamed<'a, S: Scalar>(mut r: Residual<'a, S>, name: &str) -> Residual<'a, S> {
    r.name = name.to_string();
    r
}

fn finish<S: Scalar>(d: &Dialgebra<S>, families: &[Residual<'_, S>]) -> CheckReport<S> {
    let mut rep = run(families);
    rep.advisories.extend(multiplicativity_advisories(d));
    rep
}

/// Items `vdash-left-leibniz`, `dashv-right-leibniz`, `D1`, `D2`.
pub fn check_admissible<S: Scalar>(d: &Dialgebra<S>) -> CheckReport<S> {
    let (l, r) = (d.vdash_algebra(), d.dashv_algebra());
    let families = [
        renamed(left_leibniz_residual(&l), "vdash-left-leibniz"),
        renamed(right_leibniz_residual(&r), "dashv-right-leibniz"),
        family(d, "D1", eq_d1),
        family(d, "D2", eq_d2),
    ];
    finish(d, &families)
}

/// Items `vdash-left-leibniz`, `DL1`, `DL2`, `DL3`.
pub fn check_left_dialgebra<S: Scalar>(d: &Dialgebra<S>) -> CheckReport<S> {
    let l = d.vdash_algebra();
    let families = [
        renamed(left_leibniz_residual(&l), "vdash-left-leibniz"),
        family(d, "DL1", eq_d1),
        family(d, "DL2", eq_dl2),
        family(d, "DL3", eq_dl3),
    ];
    finish(d, &families)
}

/// Items `dashv-right-leibniz`, `DR1`, `DR2`, `DR3`.
pub fn check_right_dialgebra<S: Scalar>(d: &Dialgebra<S>) -> CheckReport<S> {
    let r = d.dashv_algebra();
    let families = [
        renamed(right_leibniz_residual(&r), "dashv-right-leibniz"),
        family(d, "DR1", eq_d2),
        family(d, "DR2", eq_dr2),
        family(d, "DR3", eq_dr3),
    ];
    finish(d, &families)
}

/// `xy = x |- y - y -| x` (left) and `x.y = x -| y - y |- x` (right).
pub fn leibniz_from_admissible<S: Scalar>(
    d: &Dialgebra<S>,
) -> Result<(HomAlgebra<S>, HomAlgebra<S>)> {
    let rep = check_admissible(d);
    if !rep.passed() {
        return Err(Error::axiom("admissible dialgebra", &rep));
    }
    Ok(leibniz_from_admissible_unchecked(d))
}

fn leibniz_from_admissible_unchecked<S: Scalar>(
    d: &Dialgebra<S>,
) -> (HomAlgebra<S>, HomAlgebra<S>) {
    let swap_left = d.left.transpose_args();
    let swap_right = d.right.transpose_args();
    let left = HomAlgebra {
        space: d.space.clone(),
        product: d.right.sub(&swap_left),
        handedness: Handedness::Left,
    };
    let right = HomAlgebra {
        space: d.space.clone(),
        product: d.left.sub(&swap_right),
        handedness: Handedness::Right,
    };
    (left, right)
}

/// `m -| n = m.f(n)`, `m |- n = f(m).n` on `(M, alpha_M)`.
pub fn dialgebra_from_lm<S: Scalar>(o: &LmObject<S>) -> Result<Dialgebra<S>> {
    let rep = check_lm_object(o);
    if !rep.passed() {
        return Err(Error::axiom("object", &rep));
    }
    Ok(dialgebra_from_lm_unchecked(o))
}

/// [`dialgebra_from_lm`] without validating the object.
pub fn dialgebra_from_lm_unchecked<S: Scalar>(o: &LmObject<S>) -> Dialgebra<S> {
    let m = o.m();
    let b = &o.module;
    let e = |i: usize| Vector::<S>::basis(m, i);
    let left = Multilinear::from_fn(&[m, m], m, |t| b.act_right(&e(t[0]), &o.f(&e(t[1]))));
    let right = Multilinear::from_fn(&[m, m], m, |t| b.act_left(&o.f(&e(t[0])), &e(t[1])));
    Dialgebra {
        space: b.space.clone(),
        left,
        right,
    }
}

/// The same object read with the other handedness.
pub fn with_handedness<S: Scalar>(o: &LmObject<S>, h: Handedness) -> LmObject<S> {
    let mut out = o.clone();
    out.algebra.handedness = h;
    out
}

/// Passes when the object is valid read as a left and as a right object.
pub fn check_symmetric<S: Scalar>(o: &LmObject<S>) -> CheckReport<S> {
    let mut rep = CheckReport::new();
    rep.absorb(
        "left",
        check_lm_object(&with_handedness(o, Handedness::Left)),
    );
    rep.absorb(
        "right",
        check_lm_object(&with_handedness(o, Handedness::Right)),
    );
    rep
}

/// The two algebras on `M` of a symmetric object:
/// `mn = m |- n - n -| m = f(m).n - n.f(m)` and
/// `m.n = m -| n - n |- m = m.f(n) - f(n).m`.
pub fn symmetric_lm_products<S: Scalar>(o: &LmObject<S>) -> Result<(HomAlgebra<S>, HomAlgebra<S>)> {
    let rep = check_symmetric(o);
    if !rep.passed() {
        return Err(Error::axiom("symmetric object", &rep));
    }
    let m = o.m();
    let b = &o.module;
    let e = |i: usize| Vector::<S>::basis(m, i);
    let left = Multilinear::from_fn(&[m, m], m, |t| {
        let (u, v) = (e(t[0]), e(t[1]));
        b.act_left(&o.f(&u), &v) - b.act_right(&v, &o.f(&u))
    });
    let right = Multilinear::from_fn(&[m, m], m, |t| {
        let (u, v) = (e(t[0]), e(t[1]));
        b.act_right(&u, &o.f(&v)) - b.act_left(&o.f(&v), &u)
    });
    Ok((
        HomAlgebra {
            space: b.space.clone(),
            product: left,
            handedness: Handedness::Left,
        },
        HomAlgebra {
            space: b.space.clone(),
            product: right,
            handedness: Handedness::Right,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homcore::{check_left_hom_leibniz, check_right_hom_leibniz};
    use crate::lmcat::tensor_square_unchecked;
    use crate::zoo;

    fn l2_left_only() -> Dialgebra {
        let a = zoo::l2();
        Dialgebra {
            space: a.space.clone(),
            left: Multilinear::zeros(&[2, 2], 2),
            right: a.product.clone(),
        }
    }

    #[test]
    fn zero_dialgebra_passes_everything() {
        let d = Dialgebra::<Rational>::zero(HomSpace::identity("d", 2));
        assert!(check_admissible(&d).passed());
        assert!(check_left_dialgebra(&d).passed());
        assert!(check_right_dialgebra(&d).passed());
        let (l, r) = leibniz_from_admissible(&d).unwrap();
        assert!(l.product.is_zero() && r.product.is_zero());
    }

    #[test]
    fn adjoint_object_gives_the_product_twice() {
        let o = zoo::l2_adjoint();
        let d = dialgebra_from_lm(&o).unwrap();
        assert_eq!(d.left, o.algebra.product);
        assert_eq!(d.right, o.algebra.product);
    }

    #[test]
    fn shared_evaluators() {
        let d = l2_left_only();
        let (a, l, r) = (
            check_admissible(&d),
            check_left_dialgebra(&d),
            check_right_dialgebra(&d),
        );
        assert_eq!(
            a.item("D1").unwrap().witness,
            l.item("DL1").unwrap().witness
        );
        assert_eq!(
            a.item("D2").unwrap().witness,
            r.item("DR1").unwrap().witness
        );
    }

    #[test]
    fn zoo_objects_give_left_dialgebras() {
        for (name, o) in zoo::valid_objects() {
            let d = dialgebra_from_lm(&o).unwrap();
            assert!(
                check_left_dialgebra(&d).passed(),
                "{name}\n{}",
                check_left_dialgebra(&d)
            );
        }
    }

    #[test]
    fn right_reading_of_a_symmetric_object_gives_a_right_dialgebra() {
        let o = with_handedness(&LmObject::adjoint(&zoo::sl2()), Handedness::Right);
        let d = dialgebra_from_lm(&o).unwrap();
        assert!(check_right_dialgebra(&d).passed());
    }

    #[test]
    fn symmetric_products_agree_with_the_composite() {
        for o in [
            zoo::l2_adjoint(),
            LmObject::adjoint(&zoo::sl2()),
            zoo::zero_structure(2, 1),
        ] {
            let (l, r) = symmetric_lm_products(&o).unwrap();
            assert!(check_left_hom_leibniz(&l).passed());
            assert!(check_right_hom_leibniz(&r).passed());
            let d = dialgebra_from_lm(&o).unwrap();
            let (l2, r2) = leibniz_from_admissible_unchecked(&d);
            assert_eq!((l.product, r.product), (l2.product, r2.product));
        }
        assert!(symmetric_lm_products(&LmObject::adjoint(&zoo::leibniz_a())).is_err());
    }

    #[test]
    fn tensor_square_dialgebra_is_left() {
        let d = dialgebra_from_lm_unchecked(&tensor_square_unchecked(&zoo::l2()));
        assert!(check_left_dialgebra(&d).passed());
        assert!(check_admissible(&l2_left_only()).passed());
    }
}
