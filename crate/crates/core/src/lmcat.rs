//! Objects `f: M -> g`, their morphisms and their representations.

use crate::error::{Error, Result};
use crate::homcore::{
    bimodule_residuals, check_algebra, check_multiplicativity, homomorphism_residuals,
    leibniz_residual, semidirect_unchecked, shapes_agree, split, Bimodule, Handedness, HomAlgebra,
    HomSpace,
};
use crate::qlinalg::{Matrix, Rational, Vector};
use crate::report::{run, CheckReport, Residual};
use crate::scalar::Scalar;
use crate::tensor::Multilinear;

/// A Hom-Leibniz algebra `g`, a bimodule `M` and an equivariant anchor `f: M -> g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmObject<S = Rational> {
    pub algebra: HomAlgebra<S>,
    pub module: Bimodule<S>,
    /// `dim g` rows, `dim M` columns.
    pub anchor: Matrix<S>,
}

impl<S: Scalar> LmObject<S> {
    pub fn new(algebra: HomAlgebra<S>, module: Bimodule<S>, anchor: Matrix<S>) -> Result<Self> {
        shapes_agree(&algebra, &module)?;
        if anchor.rows() != algebra.dim() || anchor.cols() != module.dim() {
            return Err(Error::Shape(format!(
                "anchor is {}x{} but must be {}x{}",
                anchor.rows(),
                anchor.cols(),
                algebra.dim(),
                module.dim()
            )));
        }
        Ok(LmObject {
            algebra,
            module,
            anchor,
        })
    }

    /// `M = g` with the adjoint actions and `f = id`.
    pub fn adjoint(a: &HomAlgebra<S>) -> Self {
        LmObject {
            algebra: a.clone(),
            module: Bimodule::adjoint(a),
            anchor: Matrix::identity(a.dim()),
        }
    }

    pub fn n(&self) -> usize {
        self.algebra.dim()
    }

    pub fn m(&self) -> usize {
        self.module.dim()
    }

    pub fn f(&self, m: &Vector<S>) -> Vector<S> {
        self.anchor.apply(m)
    }

    pub fn handedness(&self) -> Handedness {
        self.algebra.handedness
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LmObject<T> {
        LmObject {
            algebra: self.algebra.map(&f),
            module: self.module.map(&f),
            anchor: self.anchor.map(&f),
        }
    }
}

fn basis<S: Scalar>(n: usize, i: usize) -> Vector<S> {
    Vector::basis(n, i)
}

/// `alpha f = f alpha_M`, `f(x.m) = x f(m)`, `f(m.x) = f(m) x`.
pub fn anchor_residuals<S: Scalar>(o: &LmObject<S>) -> Vec<Residual<'_, S>> {
    let (n, m) = (o.n(), o.m());
    let (a, b) = (&o.algebra, &o.module);
    vec![
        Residual::new("anchor-twist", &[m], move |t| {
            let v = basis(m, t[0]);
            a.twist(&o.f(&v)) - o.f(&b.twist(&v))
        }),
        Residual::new("anchor-left", &[n, m], move |t| {
            let (x, v) = (basis(n, t[0]), basis(m, t[1]));
            o.f(&b.act_left(&x, &v)) - a.mul(&x, &o.f(&v))
        }),
        Residual::new("anchor-right", &[m, n], move |t| {
            let (v, x) = (basis(m, t[0]), basis(n, t[1]));
            o.f(&b.act_right(&v, &x)) - a.mul(&o.f(&v), &x)
        }),
    ]
}

/// Every residual of an object: the algebra identity, the bimodule
/// conditions and the anchor conditions, with prefixed names.
pub fn object_residuals<S: Scalar>(o: &LmObject<S>) -> Vec<Residual<'_, S>> {
    let mut out = Vec::new();
    let mut alg = leibniz_residual(&o.algebra);
    alg.name = format!("algebra/{}", alg.name);
    out.push(alg);
    for mut r in bimodule_residuals(&o.algebra, &o.module) {
        r.name = format!("module/{}", r.name);
        out.push(r);
    }
    out.extend(anchor_residuals(o));
    out
}

/// Items: the algebra identity, the bimodule conditions, the anchor
/// conditions. Multiplicativity of the twist is an advisory.
pub fn check_lm_object<S: Scalar>(o: &LmObject<S>) -> CheckReport<S> {
    let mut rep = run(&object_residuals(o));
    let mult = check_multiplicativity(&o.algebra);
    rep.advisories.extend(mult.items);
    rep
}

/// Whether the anchor part of the object passes: the verdict that the
/// semidirect-product criterion reproduces.
pub fn anchor_verdict<S: Scalar>(o: &LmObject<S>) -> bool {
    run(&anchor_residuals(o)).passed()
}

/// Tests whether `(id, f): g + M -> g + g` is a homomorphism between the
/// semidirect products with `M` and with the adjoint bimodule.
pub fn check_via_semidirect_hom<S: Scalar>(o: &LmObject<S>) -> CheckReport<S> {
    let src = semidirect_unchecked(&o.algebra, &o.module);
    let dst = semidirect_unchecked(&o.algebra, &Bimodule::adjoint(&o.algebra));
    let map = Matrix::identity(o.n()).direct_sum(&o.anchor);
    let rep = run(&homomorphism_residuals(&src, &dst, &map));
    rep
}

/// `(phi0, phi1)` between two objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmMorphism<S = Rational> {
    pub phi0: Matrix<S>,
    pub phi1: Matrix<S>,
}

impl<S: Scalar> LmMorphism<S> {
    pub fn identity(o: &LmObject<S>) -> Self {
        LmMorphism {
            phi0: Matrix::identity(o.n()),
            phi1: Matrix::identity(o.m()),
        }
    }
}

pub fn check_lm_morphism<S: Scalar>(
    src: &LmObject<S>,
    dst: &LmObject<S>,
    mor: &LmMorphism<S>,
) -> CheckReport<S> {
    assert_eq!(
        (mor.phi0.rows(), mor.phi0.cols()),
        (dst.n(), src.n()),
        "phi0 shape"
    );
    assert_eq!(
        (mor.phi1.rows(), mor.phi1.cols()),
        (dst.m(), src.m()),
        "phi1 shape"
    );
    let (n, m) = (src.n(), src.m());
    let (p0, p1) = (&mor.phi0, &mor.phi1);
    let mut fams = homomorphism_residuals(&src.algebra, &dst.algebra, p0);
    fams.push(Residual::new("module-twist", &[m], move |t| {
        let v = basis(m, t[0]);
        p1.apply(&src.module.twist(&v)) - dst.module.twist(&p1.apply(&v))
    }));
    fams.push(Residual::new("module-left", &[n, m], move |t| {
        let (x, v) = (basis(n, t[0]), basis(m, t[1]));
        p1.apply(&src.module.act_left(&x, &v)) - dst.module.act_left(&p0.apply(&x), &p1.apply(&v))
    }));
    fams.push(Residual::new("module-right", &[m, n], move |t| {
        let (v, x) = (basis(m, t[0]), basis(n, t[1]));
        p1.apply(&src.module.act_right(&v, &x)) - dst.module.act_right(&p1.apply(&v), &p0.apply(&x))
    }));
    fams.push(Residual::new("anchor", &[m], move |t| {
        let v = basis(m, t[0]);
        dst.f(&p1.apply(&v)) - p0.apply(&src.f(&v))
    }));
    run(&fams)
}

/// Coefficients `(V, W, phi)` of an object: bimodules `V` and `W` over `g`,
/// `phi: V -> W` and the cross actions `W x M -> V` and `M x W -> V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmRepresentation<S = Rational> {
    pub v: Bimodule<S>,
    pub w: Bimodule<S>,
    /// `dim W` rows, `dim V` columns.
    pub phi: Matrix<S>,
    pub cross_r: Multilinear<S>,
    pub cross_l: Multilinear<S>,
}

impl<S: Scalar> LmRepresentation<S> {
    pub fn new(
        o: &LmObject<S>,
        v: Bimodule<S>,
        w: Bimodule<S>,
        phi: Matrix<S>,
        cross_r: Multilinear<S>,
        cross_l: Multilinear<S>,
    ) -> Result<Self> {
        shapes_agree(&o.algebra, &v)?;
        shapes_agree(&o.algebra, &w)?;
        let (m, vd, wd) = (o.m(), v.dim(), w.dim());
        if phi.rows() != wd || phi.cols() != vd {
            return Err(Error::Shape(format!("phi must be {wd}x{vd}")));
        }
        if cross_r.arg_dims() != [wd, m] || cross_r.out_dim() != vd {
            return Err(Error::Shape(format!(
                "crossR must have shape [{wd}, {m}] -> {vd}"
            )));
        }
        if cross_l.arg_dims() != [m, wd] || cross_l.out_dim() != vd {
            return Err(Error::Shape(format!(
                "crossL must have shape [{m}, {wd}] -> {vd}"
            )));
        }
        Ok(LmRepresentation {
            v,
            w,
            phi,
            cross_r,
            cross_l,
        })
    }

    /// `V = W = 0`.
    pub fn zero(o: &LmObject<S>) -> Self {
        let n = o.n();
        let m = o.m();
        LmRepresentation {
            v: Bimodule::trivial(HomSpace::identity("v", 0), n),
            w: Bimodule::trivial(HomSpace::identity("w", 0), n),
            phi: Matrix::zeros(0, 0),
            cross_r: Multilinear::zeros(&[0, m], 0),
            cross_l: Multilinear::zeros(&[m, 0], 0),
        }
    }

    pub fn vdim(&self) -> usize {
        self.v.dim()
    }

    pub fn wdim(&self) -> usize {
        self.w.dim()
    }

    /// `w |> m`
    pub fn tri_r(&self, w: &Vector<S>, m: &Vector<S>) -> Vector<S> {
        self.cross_r.apply(&[w, m])
    }

    /// `m <| w`
    pub fn tri_l(&self, m: &Vector<S>, w: &Vector<S>) -> Vector<S> {
        self.cross_l.apply(&[m, w])
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LmRepresentation<T> {
        LmRepresentation {
            v: self.v.map(&f),
            w: self.w.map(&f),
            phi: self.phi.map(&f),
            cross_r: self.cross_r.map(&f),
            cross_l: self.cross_l.map(&f),
        }
    }
}

/// The object as coefficients for itself: `V = M`, `W = g`, `phi = f`.
pub fn adjoint_representation<S: Scalar>(o: &LmObject<S>) -> Result<LmRepresentation<S>> {
    let rep = check_lm_object(o);
    if !rep.passed() {
        return Err(Error::axiom("object", &rep));
    }
    Ok(adjoint_representation_unchecked(o))
}

pub(crate) fn adjoint_representation_unchecked<S: Scalar>(o: &LmObject<S>) -> LmRepresentation<S> {
    LmRepresentation {
        v: o.module.clone(),
        w: Bimodule::adjoint(&o.algebra),
        phi: o.anchor.clone(),
        cross_r: o.module.left.clone(),
        cross_l: o.module.right.clone(),
    }
}

pub fn representation_residuals<'a, S: Scalar>(
    o: &'a LmObject<S>,
    r: &'a LmRepresentation<S>,
) -> Vec<Residual<'a, S>> {
    let (n, m, vd, wd) = (o.n(), o.m(), r.vdim(), r.wdim());
    let (a, b, vm, wm) = (&o.algebra, &o.module, &r.v, &r.w);
    let g = move |i: usize| basis::<S>(n, i);
    let e = move |i: usize| basis::<S>(m, i);
    let ev = move |i: usize| basis::<S>(vd, i);
    let ew = move |i: usize| basis::<S>(wd, i);
    let phi = |v: &Vector<S>| r.phi.apply(v);
    let mut out = Vec::new();
    for (prefix, module) in [("V", vm), ("W", wm)] {
        for mut res in bimodule_residuals(a, module) {
            res.name = format!("{prefix}/{}", res.name);
            out.push(res);
        }
    }
    out.push(Residual::new("phi-twist", &[vd], move |t| {
        let v = ev(t[0]);
        wm.twist(&phi(&v)) - phi(&vm.twist(&v))
    }));
    out.push(Residual::new("phi-left", &[n, vd], move |t| {
        let (x, v) = (g(t[0]), ev(t[1]));
        phi(&vm.act_left(&x, &v)) - wm.act_left(&x, &phi(&v))
    }));
    out.push(Residual::new("phi-right", &[vd, n], move |t| {
        let (v, x) = (ev(t[0]), g(t[1]));
        phi(&vm.act_right(&v, &x)) - wm.act_right(&phi(&v), &x)
    }));
    out.push(Residual::new("phi-cross-r", &[wd, m], move |t| {
        let (w, u) = (ew(t[0]), e(t[1]));
        phi(&r.tri_r(&w, &u)) - wm.act_right(&w, &o.f(&u))
    }));
    out.push(Residual::new("phi-cross-l", &[m, wd], move |t| {
        let (u, w) = (e(t[0]), ew(t[1]));
        phi(&r.tri_l(&u, &w)) - wm.act_left(&o.f(&u), &w)
    }));
    out.push(Residual::new("cross-r-twist", &[wd, m], move |t| {
        let (w, u) = (ew(t[0]), e(t[1]));
        vm.twist(&r.tri_r(&w, &u)) - r.tri_r(&wm.twist(&w), &b.twist(&u))
    }));
    out.push(Residual::new("cross-l-twist", &[m, wd], move |t| {
        let (u, w) = (e(t[0]), ew(t[1]));
        vm.twist(&r.tri_l(&u, &w)) - r.tri_l(&b.twist(&u), &wm.twist(&w))
    }));
    out.push(Residual::new("compat(x,w,m)", &[n, wd, m], move |t| {
        let (x, w, u) = (g(t[0]), ew(t[1]), e(t[2]));
        vm.act_left(&a.twist(&x), &r.tri_r(&w, &u))
            - r.tri_r(&wm.act_left(&x, &w), &b.twist(&u))
            - r.tri_r(&wm.twist(&w), &b.act_left(&x, &u))
    }));
    out.push(Residual::new("compat(w,x,m)", &[wd, n, m], move |t| {
        let (w, x, u) = (ew(t[0]), g(t[1]), e(t[2]));
        r.tri_r(&wm.twist(&w), &b.act_left(&x, &u))
            - r.tri_r(&wm.act_right(&w, &x), &b.twist(&u))
            - vm.act_left(&a.twist(&x), &r.tri_r(&w, &u))
    }));
    out.push(Residual::new("compat(m,w,x)", &[m, wd, n], move |t| {
        let (u, w, x) = (e(t[0]), ew(t[1]), g(t[2]));
        r.tri_l(&b.twist(&u), &wm.act_right(&w, &x))
            - vm.act_right(&r.tri_l(&u, &w), &a.twist(&x))
            - r.tri_r(&wm.twist(&w), &b.act_right(&u, &x))
    }));
    out.push(Residual::new("compat(m,x,w)", &[m, n, wd], move |t| {
        let (u, x, w) = (e(t[0]), g(t[1]), ew(t[2]));
        r.tri_l(&b.twist(&u), &wm.act_left(&x, &w))
            - r.tri_l(&b.act_right(&u, &x), &wm.twist(&w))
            - vm.act_left(&a.twist(&x), &r.tri_l(&u, &w))
    }));
    out.push(Residual::new("compat(x,m,w)", &[n, m, wd], move |t| {
        let (x, u, w) = (g(t[0]), e(t[1]), ew(t[2]));
        vm.act_left(&a.twist(&x), &r.tri_l(&u, &w))
            - r.tri_l(&b.act_left(&x, &u), &wm.twist(&w))
            - r.tri_l(&b.twist(&u), &wm.act_left(&x, &w))
    }));
    out.push(Residual::new("compat(w,m,x)", &[wd, m, n], move |t| {
        let (w, u, x) = (ew(t[0]), e(t[1]), g(t[2]));
        r.tri_r(&wm.twist(&w), &b.act_right(&u, &x))
            - vm.act_right(&r.tri_r(&w, &u), &a.twist(&x))
            - r.tri_l(&b.twist(&u), &wm.act_right(&w, &x))
    }));
    out
}

pub fn check_lm_representation<S: Scalar>(
    o: &LmObject<S>,
    r: &LmRepresentation<S>,
) -> CheckReport<S> {
    run(&representation_residuals(o, r))
}

fn refuse_unless<S: Scalar>(context: &str, rep: CheckReport<S>) -> Result<()> {
    if rep.passed() {
        Ok(())
    } else {
        Err(Error::axiom(context, &rep))
    }
}

/// The object on `(M + V, g + W, f + phi)`, basis `M` (resp. `g`) first.
pub fn lm_semidirect<S: Scalar>(o: &LmObject<S>, r: &LmRepresentation<S>) -> Result<LmObject<S>> {
    refuse_unless("object", check_lm_object(o))?;
    refuse_unless("representation", check_lm_representation(o, r))?;
    Ok(lm_semidirect_unchecked(o, r, None))
}

/// The semidirect object, optionally deformed by a 2-cochain
/// `(omega, mu, nu, theta)`; this is the total object of an abelian extension.
pub(crate) fn lm_semidirect_unchecked<S: Scalar>(
    o: &LmObject<S>,
    r: &LmRepresentation<S>,
    c: Option<&crate::cohomology::Cochain2<S>>,
) -> LmObject<S> {
    let (n, m, vd, wd) = (o.n(), o.m(), r.vdim(), r.wdim());
    let a = &o.algebra;
    let b = &o.module;
    let gw = n + wd;
    let mv = m + vd;
    let product = Multilinear::from_fn(&[gw, gw], gw, |t| {
        let (x, w) = split(&basis::<S>(gw, t[0]), n);
        let (y, u) = split(&basis::<S>(gw, t[1]), n);
        let mut tail = r.w.act_left(&x, &u) + r.w.act_right(&w, &y);
        if let Some(c) = c {
            tail += &c.omega.apply(&[&x, &y]);
        }
        a.mul(&x, &y).concat(&tail)
    });
    let left = Multilinear::from_fn(&[gw, mv], mv, |t| {
        let (x, w) = split(&basis::<S>(gw, t[0]), n);
        let (u, v) = split(&basis::<S>(mv, t[1]), m);
        let mut tail = r.v.act_left(&x, &v) + r.tri_r(&w, &u);
        if let Some(c) = c {
            tail += &c.mu.apply(&[&x, &u]);
        }
        b.act_left(&x, &u).concat(&tail)
    });
    let right = Multilinear::from_fn(&[mv, gw], mv, |t| {
        let (u, v) = split(&basis::<S>(mv, t[0]), m);
        let (x, w) = split(&basis::<S>(gw, t[1]), n);
        let mut tail = r.v.act_right(&v, &x) + r.tri_l(&u, &w);
        if let Some(c) = c {
            tail += &c.nu.apply(&[&u, &x]);
        }
        b.act_right(&u, &x).concat(&tail)
    });
    let mut anchor = o.anchor.direct_sum(&r.phi);
    if let Some(c) = c {
        for j in 0..m {
            for i in 0..wd {
                let cur = anchor.get(n + i, j).clone();
                anchor.set(n + i, j, cur + c.theta.get(i, j).clone());
            }
        }
    }
    LmObject {
        algebra: HomAlgebra {
            space: a.space.direct_sum(&r.w.space),
            product,
            handedness: a.handedness,
        },
        module: Bimodule {
            space: b.space.direct_sum(&r.v.space),
            left,
            right,
        },
        anchor,
    }
}

fn kron_vec<S: Scalar>(a: &Vector<S>, b: &Vector<S>) -> Vector<S> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a.iter() {
        for y in b.iter() {
            out.push(x.clone() * y.clone());
        }
    }
    Vector(out)
}

/// `M = g (x) g` with basis `e_i (x) e_j` in lexicographic order,
/// `x.(a(x)b) = xa (x) alpha(b)`, `(a(x)b).x = alpha(a) (x) bx`, `f(a(x)b) = ab`.
/// The result is returned as built; run [`check_lm_object`] on it.
pub fn tensor_square_lm<S: Scalar>(a: &HomAlgebra<S>) -> Result<LmObject<S>> {
    if a.handedness != Handedness::Left {
        return Err(Error::Shape(
            "the tensor square needs a left algebra".into(),
        ));
    }
    refuse_unless("algebra", check_algebra(a))?;
    let mult = check_multiplicativity(a);
    if !mult.passed() {
        return Err(Error::NotMultiplicative(mult.to_string()));
    }
    Ok(tensor_square_unchecked(a))
}

pub(crate) fn tensor_square_unchecked<S: Scalar>(a: &HomAlgebra<S>) -> LmObject<S> {
    let n = a.dim();
    let g = |i: usize| basis::<S>(n, i);
    let labels = a
        .space
        .labels
        .iter()
        .flat_map(|p| {
            a.space
                .labels
                .iter()
                .map(move |q| format!("{p}\u{2297}{q}"))
        })
        .collect();
    let space = HomSpace {
        labels,
        twist: a.alpha().kron(a.alpha()),
    };
    let left = Multilinear::from_fn(&[n, n * n], n * n, |t| {
        let (i, j) = (t[1] / n, t[1] % n);
        kron_vec(&a.mul(&g(t[0]), &g(i)), &a.twist(&g(j)))
    });
    let right = Multilinear::from_fn(&[n * n, n], n * n, |t| {
        let (i, j) = (t[0] / n, t[0] % n);
        kron_vec(&a.twist(&g(i)), &a.mul(&g(j), &g(t[1])))
    });
    let cols: Vec<Vector<S>> = (0..n * n).map(|k| a.mul(&g(k / n), &g(k % n))).collect();
    LmObject {
        algebra: a.clone(),
        module: Bimodule { space, left, right },
        anchor: Matrix::from_columns(n, &cols),
    }
}

/// Reports whether `o` passes its checks, for callers that need a bare flag.
pub fn is_valid<S: Scalar>(o: &LmObject<S>) -> bool {
    check_lm_object(o).passed()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn adjoint_object_of_l2_passes() {
        let o = zoo::l2_adjoint();
        assert!(check_lm_object(&o).passed());
        assert!(check_via_semidirect_hom(&o).passed());
        let r = adjoint_representation(&o).unwrap();
        assert!(check_lm_representation(&o, &r).passed());
    }

    #[test]
    fn broken_anchor_fails_equivariance_at_e1_e1() {
        let mut o = zoo::l2_adjoint();
        o.anchor = Matrix::diagonal(&[q(1), q(0)]);
        let rep = check_lm_object(&o);
        let item = rep.item("anchor-left").unwrap();
        assert!(!item.passed);
        assert_eq!(item.witness.as_ref().unwrap().tuple, vec![0, 0]);
        assert!(!check_via_semidirect_hom(&o).passed());
        assert!(adjoint_representation(&o).is_err());
    }

    #[test]
    fn zero_phi_breaks_the_anchor_compatibility() {
        let o = zoo::l2_adjoint();
        let mut r = adjoint_representation(&o).unwrap();
        r.phi = Matrix::zeros(2, 2);
        let rep = check_lm_representation(&o, &r);
        assert!(!rep.item("phi-cross-r").unwrap().passed);
    }

    #[test]
    fn semidirect_of_l2_adjoint_has_dims_four() {
        let o = zoo::l2_adjoint();
        let r = adjoint_representation(&o).unwrap();
        let s = lm_semidirect(&o, &r).unwrap();
        assert_eq!((s.n(), s.m()), (4, 4));
        assert!(check_lm_object(&s).passed());
        let trivial = lm_semidirect(&o, &LmRepresentation::zero(&o)).unwrap();
        assert_eq!(trivial, o);
    }

    #[test]
    fn identity_morphism_passes() {
        let o = zoo::l2_adjoint();
        assert!(check_lm_morphism(&o, &o, &LmMorphism::identity(&o)).passed());
    }

    #[test]
    fn tensor_square_shape() {
        let o = tensor_square_lm(&zoo::l2()).unwrap();
        assert_eq!(o.m(), 4);
        assert_eq!(o.anchor.column(0), Vector(vec![q(0), q(1)]));
        for k in 1..4 {
            assert!(o.anchor.column(k).is_zero());
        }
        assert!(check_lm_object(&o).passed_with_prefix("anchor"));
    }
}
