//! Abelian extensions `0 -> (V, W, phi) -> (M^, g^, f^) -> (M, g, f) -> 0`.
//!
//! Extensions carry their inclusion and projection maps explicitly, so an
//! extension given in any basis can be checked. The constructor here always
//! produces block form: `g^ = g + W` and `M^ = M + V`, base block first.

use crate::cohomology::{check_2_cocycle, Cochain1, Cochain2, Complex};
use crate::error::{Error, Result};
use crate::homcore::{Bimodule, HomSpace};
use crate::lmcat::{
    check_lm_morphism, check_lm_object, check_lm_representation, lm_semidirect_unchecked,
    LmMorphism, LmObject, LmRepresentation,
};
use crate::qlinalg::{Matrix, Vector};
use crate::report::{run, CheckItem, CheckReport, Residual};
use crate::tensor::Multilinear;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianExtension {
    pub base: LmObject,
    pub fiber: LmRepresentation,
    pub total: LmObject,
    /// `W -> g^`
    pub i0: Matrix,
    /// `V -> M^`
    pub i1: Matrix,
    /// `g^ -> g`
    pub p0: Matrix,
    /// `M^ -> M`
    pub p1: Matrix,
}

/// `(sigma0: g -> g^, sigma1: M -> M^)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub sigma0: Matrix,
    pub sigma1: Matrix,
}

fn basis(n: usize, i: usize) -> Vector {
    Vector::basis(n, i)
}

/// `[I; 0]` of shape `(a + b) x a`.
fn top_inclusion(a: usize, b: usize) -> Matrix {
    Matrix::identity(a).direct_sum(&Matrix::zeros(b, 0))
}

/// `[0; I]` of shape `(a + b) x b`.
fn bottom_inclusion(a: usize, b: usize) -> Matrix {
    Matrix::zeros(a, 0).direct_sum(&Matrix::identity(b))
}

/// The total object built from a 2-cocycle:
/// `f^(m + v) = f(m) + theta(m) + phi(v)`,
/// `(x + w)(x' + w') = xx' + omega(x, x') + x.w' + w.x'`,
/// `(x + w).(m + v) = x.m + mu(x, m) + x.v + w |> m`,
/// `(m + v).(x + w) = m.x + nu(m, x) + v.x + m <| w`.
///
/// Refuses input that fails the object, representation or cocycle checks,
/// and a cocycle whose total object fails the twist conditions.
pub fn extension_from_cocycle(o: &LmObject, r: &LmRepresentation, c: &Cochain2) -> Result<AbelianExtension> {
    let obj = check_lm_object(o);
    if !obj.passed() {
        return Err(Error::axiom("object", &obj));
    }
    let rep = check_lm_representation(o, r);
    if !rep.passed() {
        return Err(Error::axiom("representation", &rep));
    }
    let coc = check_2_cocycle(o, r, c);
    if !coc.passed() {
        return Err(Error::axiom("cocycle", &coc));
    }
    let e = extension_unchecked(o, r, c);
    let tot = check_lm_object(&e.total);
    if !tot.passed() {
        return Err(Error::axiom("total object", &tot));
    }
    Ok(e)
}

fn extension_unchecked(o: &LmObject, r: &LmRepresentation, c: &Cochain2) -> AbelianExtension {
    let (n, m, v, w) = (o.n(), o.m(), r.vdim(), r.wdim());
    AbelianExtension {
        base: o.clone(),
        fiber: r.clone(),
        total: lm_semidirect_unchecked(o, r, Some(c)),
        i0: bottom_inclusion(n, w),
        i1: bottom_inclusion(m, v),
        p0: top_inclusion(n, w).transpose(),
        p1: top_inclusion(m, v).transpose(),
    }
}

/// `Im i = Ker p` on both rows, the two squares commute, `p` is a morphism
/// of objects, the total object is valid and the fiber is abelian inside it.
pub fn check_extension(e: &AbelianExtension) -> CheckReport {
    let (n, m) = (e.base.n(), e.base.m());
    let (v, w) = (e.fiber.vdim(), e.fiber.wdim());
    let (gn, mn) = (e.total.n(), e.total.m());
    let mut rep = CheckReport::new();
    rep.absorb("total", check_lm_object(&e.total));
    let shapes = (e.i0.rows(), e.i0.cols()) == (gn, w)
        && (e.i1.rows(), e.i1.cols()) == (mn, v)
        && (e.p0.rows(), e.p0.cols()) == (n, gn)
        && (e.p1.rows(), e.p1.cols()) == (m, mn);
    if !shapes {
        rep.push(CheckItem::fail("shapes", None));
        return rep;
    }
    let exact = |i: &Matrix, p: &Matrix| {
        p.compose(i).is_zero() && i.rank() == i.cols() && p.rank() == p.rows() && i.cols() + p.rows() == i.rows()
    };
    let item = |name: &str, ok: bool| {
        if ok {
            CheckItem::pass(name)
        } else {
            CheckItem::fail(name, None)
        }
    };
    rep.push(item("exact-g", exact(&e.i0, &e.p0)));
    rep.push(item("exact-m", exact(&e.i1, &e.p1)));
    let (t, b) = (&e.total, &e.base);
    let fam = run(&[
        Residual::new("commute-p", &[mn], move |k| {
            let u = basis(mn, k[0]);
            e.p0.apply(&t.f(&u)) - b.f(&e.p1.apply(&u))
        }),
        Residual::new("commute-i", &[v], move |k| {
            let u = basis(v, k[0]);
            t.f(&e.i1.apply(&u)) - e.i0.apply(&e.fiber.phi.apply(&u))
        }),
        Residual::new("abelian-product", &[w, w], move |k| {
            t.algebra.mul(&e.i0.apply(&basis(w, k[0])), &e.i0.apply(&basis(w, k[1])))
        }),
        Residual::new("abelian-left", &[w, v], move |k| {
            t.module.act_left(&e.i0.apply(&basis(w, k[0])), &e.i1.apply(&basis(v, k[1])))
        }),
        Residual::new("abelian-right", &[v, w], move |k| {
            t.module.act_right(&e.i1.apply(&basis(v, k[0])), &e.i0.apply(&basis(w, k[1])))
        }),
    ]);
    rep.items.extend(fam.items);
    let p = LmMorphism { phi0: e.p0.clone(), phi1: e.p1.clone() };
    rep.absorb("projection", check_lm_morphism(&e.total, &e.base, &p));
    rep
}

/// Items `section-g` and `section-m`; the anchor square `f^ sigma1 =
/// sigma0 f` is an advisory (it forces `theta = 0`, so it cannot be required
/// of the splittings that classify extensions).
pub fn check_splitting(e: &AbelianExtension, s: &Splitting) -> CheckReport {
    let (n, m) = (e.base.n(), e.base.m());
    let mut rep = CheckReport::new();
    let shapes = (s.sigma0.rows(), s.sigma0.cols()) == (e.total.n(), n)
        && (s.sigma1.rows(), s.sigma1.cols()) == (e.total.m(), m);
    if !shapes {
        rep.push(CheckItem::fail("shapes", None));
        return rep;
    }
    let fam = run(&[
        Residual::new("section-g", &[n], |k| e.p0.apply(&s.sigma0.apply(&basis(n, k[0]))) - basis(n, k[0])),
        Residual::new("section-m", &[m], |k| e.p1.apply(&s.sigma1.apply(&basis(m, k[0]))) - basis(m, k[0])),
    ]);
    rep.items.extend(fam.items);
    let adv = run(&[Residual::new("anchor", &[m], |k| {
        let u = basis(m, k[0]);
        e.total.f(&s.sigma1.apply(&u)) - s.sigma0.apply(&e.base.f(&u))
    })]);
    rep.advisories.extend(adv.items);
    rep
}

/// A right inverse of each projection, column by column; block inclusion on
/// block-form extensions.
pub fn canonical_splitting(e: &AbelianExtension) -> Result<Splitting> {
    let section = |p: &Matrix| -> Result<Matrix> {
        let cols = (0..p.rows())
            .map(|j| p.solve(&basis(p.rows(), j))?.ok_or_else(|| Error::Shape("projection is not onto".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(p.cols(), &cols))
    };
    Ok(Splitting { sigma0: section(&e.p0)?, sigma1: section(&e.p1)? })
}

/// `sigma + i b`: `sigma0 + i0 b0`, `sigma1 + i1 b1`.
pub fn perturbed_splitting(e: &AbelianExtension, s: &Splitting, b: &Cochain1) -> Splitting {
    Splitting { sigma0: s.sigma0.add(&e.i0.compose(&b.n0)), sigma1: s.sigma1.add(&e.i1.compose(&b.n1)) }
}

/// Preimage under an injective map, or an error naming `what`.
fn preimage(i: &Matrix, x: &Vector, what: &str) -> Result<Vector> {
    i.solve(x)?.ok_or_else(|| Error::NotInSubspace(format!("{what} does not land in the fiber")))
}

/// The classifying cochain of a splitting:
/// `theta(m) = f^ sigma1(m) - sigma0 f(m)`,
/// `omega(x, y) = sigma0(x) sigma0(y) - sigma0(xy)`,
/// `mu(x, m) = sigma0(x).sigma1(m) - sigma1(x.m)`,
/// `nu(m, x) = sigma1(m).sigma0(x) - sigma1(m.x)`.
pub fn extract_cocycle(e: &AbelianExtension, s: &Splitting) -> Result<Cochain2> {
    let rep = check_splitting(e, s);
    if !rep.passed() {
        return Err(Error::axiom("splitting", &rep));
    }
    let (n, m) = (e.base.n(), e.base.m());
    let (v, w) = (e.fiber.vdim(), e.fiber.wdim());
    let (t, b) = (&e.total, &e.base);
    let (s0, s1) = (&s.sigma0, &s.sigma1);
    let mut err = None;
    let mut keep = |r: Result<Vector>, dim: usize| match r {
        Ok(x) => x,
        Err(x) => {
            err.get_or_insert(x);
            Vector::zeros(dim)
        }
    };
    let theta_cols: Vec<Vector> = (0..m)
        .map(|j| {
            let u = basis(m, j);
            let x = t.f(&s1.apply(&u)) - s0.apply(&b.f(&u));
            keep(preimage(&e.i0, &x, "theta"), w)
        })
        .collect();
    let omega = Multilinear::from_fn(&[n, n], w, |k| {
        let (x, y) = (basis(n, k[0]), basis(n, k[1]));
        let z = t.algebra.mul(&s0.apply(&x), &s0.apply(&y)) - s0.apply(&b.algebra.mul(&x, &y));
        keep(preimage(&e.i0, &z, "omega"), w)
    });
    let mu = Multilinear::from_fn(&[n, m], v, |k| {
        let (x, u) = (basis(n, k[0]), basis(m, k[1]));
        let z = t.module.act_left(&s0.apply(&x), &s1.apply(&u)) - s1.apply(&b.module.act_left(&x, &u));
        keep(preimage(&e.i1, &z, "mu"), v)
    });
    let nu = Multilinear::from_fn(&[m, n], v, |k| {
        let (u, x) = (basis(m, k[0]), basis(n, k[1]));
        let z = t.module.act_right(&s1.apply(&u), &s0.apply(&x)) - s1.apply(&b.module.act_right(&u, &x));
        keep(preimage(&e.i1, &z, "nu"), v)
    });
    if let Some(x) = err {
        return Err(x);
    }
    Ok(Cochain2 { omega, mu, nu, theta: Matrix::from_columns(w, &theta_cols) })
}

/// The representation on `(V, W, phi)` read off through a splitting:
/// `x.v = sigma0(x).v`, `x.w = sigma0(x)w`, `w |> m = w.sigma1(m)`,
/// `m <| w = sigma1(m).w` and their mirror images; twists and `phi` are
/// restricted from the total object.
pub fn induced_representation(e: &AbelianExtension, s: &Splitting) -> Result<LmRepresentation> {
    let rep = check_splitting(e, s);
    if !rep.passed() {
        return Err(Error::axiom("splitting", &rep));
    }
    let (n, m) = (e.base.n(), e.base.m());
    let (v, w) = (e.fiber.vdim(), e.fiber.wdim());
    let (t, s0, s1) = (&e.total, &s.sigma0, &s.sigma1);
    let (i0, i1) = (&e.i0, &e.i1);
    let pull = |i: &Matrix, x: Vector, dim: usize| preimage(i, &x, "action").unwrap_or_else(|_| Vector::zeros(dim));
    let checked = |i: &Matrix, x: Vector| preimage(i, &x, "action").map(|_| ());
    // First validate that every table lands in the fiber.
    for a in 0..n {
        for b in 0..v {
            checked(i1, t.module.act_left(&s0.apply(&basis(n, a)), &i1.apply(&basis(v, b))))?;
            checked(i1, t.module.act_right(&i1.apply(&basis(v, b)), &s0.apply(&basis(n, a))))?;
        }
        for b in 0..w {
            checked(i0, t.algebra.mul(&s0.apply(&basis(n, a)), &i0.apply(&basis(w, b))))?;
            checked(i0, t.algebra.mul(&i0.apply(&basis(w, b)), &s0.apply(&basis(n, a))))?;
        }
    }
    let restrict = |i: &Matrix, twist: &Matrix, dim: usize| -> Result<Matrix> {
        let cols = (0..dim).map(|k| preimage(i, &twist.apply(&i.apply(&basis(dim, k))), "twist")).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(dim, &cols))
    };
    let av = restrict(i1, &t.module.space.twist, v)?;
    let aw = restrict(i0, &t.algebra.space.twist, w)?;
    let phi_cols = (0..v).map(|k| preimage(i0, &t.f(&i1.apply(&basis(v, k))), "phi")).collect::<Result<Vec<_>>>()?;
    let vl = Multilinear::from_fn(&[n, v], v, |k| pull(i1, t.module.act_left(&s0.apply(&basis(n, k[0])), &i1.apply(&basis(v, k[1]))), v));
    let vr = Multilinear::from_fn(&[v, n], v, |k| pull(i1, t.module.act_right(&i1.apply(&basis(v, k[0])), &s0.apply(&basis(n, k[1]))), v));
    let wl = Multilinear::from_fn(&[n, w], w, |k| pull(i0, t.algebra.mul(&s0.apply(&basis(n, k[0])), &i0.apply(&basis(w, k[1]))), w));
    let wr = Multilinear::from_fn(&[w, n], w, |k| pull(i0, t.algebra.mul(&i0.apply(&basis(w, k[0])), &s0.apply(&basis(n, k[1]))), w));
    for a in 0..w {
        for b in 0..m {
            checked(i1, t.module.act_left(&i0.apply(&basis(w, a)), &s1.apply(&basis(m, b))))?;
            checked(i1, t.module.act_right(&s1.apply(&basis(m, b)), &i0.apply(&basis(w, a))))?;
        }
    }
    let cross_r = Multilinear::from_fn(&[w, m], v, |k| pull(i1, t.module.act_left(&i0.apply(&basis(w, k[0])), &s1.apply(&basis(m, k[1]))), v));
    let cross_l = Multilinear::from_fn(&[m, w], v, |k| pull(i1, t.module.act_right(&s1.apply(&basis(m, k[0])), &i0.apply(&basis(w, k[1]))), v));
    let vspace = HomSpace { labels: e.fiber.v.space.labels.clone(), twist: av };
    let wspace = HomSpace { labels: e.fiber.w.space.labels.clone(), twist: aw };
    Ok(LmRepresentation {
        v: Bimodule { space: vspace, left: vl, right: vr },
        w: Bimodule { space: wspace, left: wl, right: wr },
        phi: Matrix::from_columns(w, &phi_cols),
        cross_r,
        cross_l,
    })
}

/// A morphism `F: e -> e2` with `F i = j` and `q F = p`, if the classifying
/// cocycles (canonical splittings) differ by a coboundary `D1 b`. Then
/// `F0(sigma0 x + i0 w) = sigma0' x + j0 b0(x) + j0 w` and likewise `F1`.
/// The morphism is verified before it is returned.
pub fn are_equivalent(e: &AbelianExtension, e2: &AbelianExtension, compat: bool) -> Result<Option<LmMorphism>> {
    if e.base != e2.base || e.fiber != e2.fiber {
        return Err(Error::Shape("extensions of different objects or by different representations".into()));
    }
    let (s, s2) = (canonical_splitting(e)?, canonical_splitting(e2)?);
    let (c, c2) = (extract_cocycle(e, &s)?, extract_cocycle(e2, &s2)?);
    let Some(b) = Complex::new(&e.base, &e.fiber, compat)?.solve_d1(&c.sub(&c2))? else {
        return Ok(None);
    };
    // retraction onto the fiber along the splitting: i^-1 (id - sigma p)
    let retract = |i: &Matrix, sigma: &Matrix, p: &Matrix| -> Result<Matrix> {
        let proj = Matrix::identity(i.rows()).sub(&sigma.compose(p));
        let cols = proj.columns().iter().map(|x| preimage(i, x, "retraction")).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(i.cols(), &cols))
    };
    let r0 = retract(&e.i0, &s.sigma0, &e.p0)?;
    let r1 = retract(&e.i1, &s.sigma1, &e.p1)?;
    let f0 = s2.sigma0.compose(&e.p0).add(&e2.i0.compose(&b.n0).compose(&e.p0)).add(&e2.i0.compose(&r0));
    let f1 = s2.sigma1.compose(&e.p1).add(&e2.i1.compose(&b.n1).compose(&e.p1)).add(&e2.i1.compose(&r1));
    let f = LmMorphism { phi0: f0, phi1: f1 };
    let mut rep = check_lm_morphism(&e.total, &e2.total, &f);
    let diagram = [
        ("fiber-g", f.phi0.compose(&e.i0) == e2.i0),
        ("fiber-m", f.phi1.compose(&e.i1) == e2.i1),
        ("base-g", e2.p0.compose(&f.phi0) == e.p0),
        ("base-m", e2.p1.compose(&f.phi1) == e.p1),
    ];
    for (name, ok) in diagram {
        rep.push(if ok { CheckItem::pass(name) } else { CheckItem::fail(name, None) });
    }
    if !rep.passed() {
        return Err(Error::axiom("equivalence", &rep));
    }
    Ok(Some(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::apply_d1;
    use crate::lmcat::{adjoint_representation, lm_semidirect};
    use crate::qlinalg::Rational;
    use crate::zoo;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn zero_c2(o: &LmObject, r: &LmRepresentation) -> Cochain2 {
        Cochain2::zero(crate::cohomology::Dims::of(o, r))
    }

    #[test]
    fn zero_cocycle_gives_the_semidirect_product() {
        let o = zoo::l2_adjoint();
        let r = adjoint_representation(&o).unwrap();
        let e = extension_from_cocycle(&o, &r, &zero_c2(&o, &r)).unwrap();
        assert_eq!(e.total, lm_semidirect(&o, &r).unwrap());
        assert!(check_extension(&e).passed());
        let s = canonical_splitting(&e).unwrap();
        assert!(extract_cocycle(&e, &s).unwrap().is_zero());
        assert_eq!(induced_representation(&e, &s).unwrap(), r);
    }

    #[test]
    fn perturbed_splitting_adds_a_coboundary() {
        let o = zoo::l2_adjoint();
        let r = adjoint_representation(&o).unwrap();
        let e = extension_from_cocycle(&o, &r, &zero_c2(&o, &r)).unwrap();
        let s = canonical_splitting(&e).unwrap();
        let b = Cochain1 { n0: Matrix::diagonal(&[q(1), q(2)]), n1: Matrix::diagonal(&[q(-1), q(3)]) };
        let s2 = perturbed_splitting(&e, &s, &b);
        assert_eq!(extract_cocycle(&e, &s2).unwrap(), apply_d1(&o, &r, &b));
        assert_eq!(induced_representation(&e, &s2).unwrap(), r);
    }

    #[test]
    fn non_cocycle_is_refused_by_name() {
        let o = zoo::l2_adjoint();
        let r = adjoint_representation(&o).unwrap();
        let mut c = zero_c2(&o, &r);
        c.omega.set(&[0, 0], &Vector::basis(2, 0));
        assert!(!check_2_cocycle(&o, &r, &c).passed());
        match extension_from_cocycle(&o, &r, &c) {
            Err(Error::AxiomFailure { context, report }) => {
                assert_eq!(context, "cocycle");
                assert!(report.contains("\u{2717} cocycle("), "{report}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn equivalence_on_zero_structure() {
        let o = zoo::zero_structure(1, 1);
        let r = adjoint_representation(&o).unwrap();
        let e = extension_from_cocycle(&o, &r, &zero_c2(&o, &r)).unwrap();
        assert!(are_equivalent(&e, &e, true).unwrap().is_some());
        let mut c = zero_c2(&o, &r);
        c.omega = Multilinear::from_flat(&[1, 1], 1, vec![q(1)]).unwrap();
        let e2 = extension_from_cocycle(&o, &r, &c).unwrap();
        assert!(are_equivalent(&e, &e2, true).unwrap().is_none());
    }

    #[test]
    fn cohomologous_cocycles_give_equivalent_extensions() {
        let o = zoo::l2_adjoint();
        let r = adjoint_representation(&o).unwrap();
        let b = Cochain1 { n0: Matrix::diagonal(&[q(2), q(1)]), n1: Matrix::diagonal(&[q(0), q(5)]) };
        let c = apply_d1(&o, &r, &b);
        let e = extension_from_cocycle(&o, &r, &c).unwrap();
        assert!(check_extension(&e).passed());
        let s = canonical_splitting(&e).unwrap();
        assert_eq!(extract_cocycle(&e, &s).unwrap(), c);
        let triv = extension_from_cocycle(&o, &r, &zero_c2(&o, &r)).unwrap();
        let f = are_equivalent(&e, &triv, true).unwrap().unwrap();
        assert!(check_lm_morphism(&e.total, &triv.total, &f).passed());
    }

    #[test]
    fn representation_does_not_depend_on_the_splitting() {
        let o = zoo::l2_yau_adjoint();
        let r = adjoint_representation(&o).unwrap();
        let c = apply_d1(&o, &r, &Cochain1 { n0: Matrix::identity(2), n1: Matrix::zeros(2, 2) });
        let e = extension_from_cocycle(&o, &r, &c).unwrap();
        let s = canonical_splitting(&e).unwrap();
        for k in 0..4 {
            let mut b = Cochain1 { n0: Matrix::zeros(2, 2), n1: Matrix::zeros(2, 2) };
            b.n0.set(k / 2, k % 2, q(k as i64 + 1));
            b.n1.set(k % 2, k / 2, q(1 - k as i64));
            assert_eq!(induced_representation(&e, &perturbed_splitting(&e, &s, &b)).unwrap(), r);
        }
    }
}
