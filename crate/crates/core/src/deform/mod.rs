//! Deformations of an object along a formal parameter `lambda`.
//!
//! A deformation is a series of 2-cochains added to the base structure
//! (`f + lambda theta_1 + ...`, `xy + lambda omega_1(x, y) + ...`, and so on).
//! Deformed structures are evaluated over [`TruncatedPolynomial`] scalars and
//! checked with the same checkers as the base; per-order verdicts come from
//! reading off `lambda` coefficients of the residuals.

mod polynomial;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use polynomial::{Poly, TruncatedPolynomial};

use crate::cohomology::{
    check_2_cocycle, Cochain, Cochain1, Cochain2, CohomologyDims, Complex, D0Strategy,
};
use crate::error::{Error, Result};
use crate::homcore::{Bimodule, HomAlgebra};
use crate::lmcat::{
    adjoint_representation_unchecked, check_lm_morphism, check_lm_object, object_residuals,
    LmMorphism, LmObject,
};
use crate::qlinalg::{Matrix, Rational, Vector};
use crate::report::{run, CheckItem, CheckReport, Residual, Witness};
use crate::tensor::{tuples, Multilinear};

/// A base object and the higher terms of a deformation; `series[i]` is the
/// coefficient of `lambda^(i+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationData {
    pub base: LmObject,
    pub series: Vec<Cochain2>,
}

impl DeformationData {
    /// A first-order deformation.
    pub fn infinitesimal(base: LmObject, c: Cochain2) -> Self {
        DeformationData { base, series: vec![c] }
    }

    pub fn trivial(base: LmObject) -> Self {
        DeformationData { base, series: Vec::new() }
    }

    /// The `lambda^1` term, zero if absent.
    pub fn first_order(&self) -> Cochain2 {
        self.series.first().cloned().unwrap_or_else(|| zero_cochain(&self.base))
    }
}

fn zero_cochain(o: &LmObject) -> Cochain2 {
    let n = o.n();
    let m = o.m();
    Cochain2 {
        omega: Multilinear::zeros(&[n, n], n),
        mu: Multilinear::zeros(&[n, m], m),
        nu: Multilinear::zeros(&[m, n], m),
        theta: Matrix::zeros(n, m),
    }
}

fn check_shapes(o: &LmObject, c: &Cochain2) -> Result<()> {
    let z = zero_cochain(o);
    let ok = c.omega.arg_dims() == z.omega.arg_dims()
        && c.omega.out_dim() == z.omega.out_dim()
        && c.mu.arg_dims() == z.mu.arg_dims()
        && c.mu.out_dim() == z.mu.out_dim()
        && c.nu.arg_dims() == z.nu.arg_dims()
        && c.nu.out_dim() == z.nu.out_dim()
        && (c.theta.rows(), c.theta.cols()) == (z.theta.rows(), z.theta.cols());
    if ok {
        Ok(())
    } else {
        Err(Error::Shape("cochain does not match the adjoint coefficients of the base".into()))
    }
}

/// The deformed object over `Q[lambda]/(lambda^(order+1))`. Twists are left
/// unchanged; terms beyond `order` are dropped.
pub fn deformed_structure(d: &DeformationData, order: usize) -> Result<LmObject<Poly>> {
    for c in &d.series {
        check_shapes(&d.base, c)?;
    }
    let lift = |q: &Rational| Poly::constant(q.clone(), order);
    let mut out = d.base.map(lift);
    for (i, c) in d.series.iter().enumerate().take(order) {
        let lam = Poly::monomial(Rational::from(1), i + 1, order);
        let term = |t: &Multilinear| t.map(lift).scale(&lam);
        out.algebra.product = out.algebra.product.add(&term(&c.omega));
        out.module.left = out.module.left.add(&term(&c.mu));
        out.module.right = out.module.right.add(&term(&c.nu));
        out.anchor = out.anchor.add(&c.theta.map(lift).scale(&lam));
    }
    Ok(out)
}

/// The object on the same spaces and twists whose product is `omega`,
/// actions `mu`, `nu` and anchor `theta`.
pub fn cochain_object(base: &LmObject, c: &Cochain2) -> LmObject {
    LmObject {
        algebra: HomAlgebra {
            space: base.algebra.space.clone(),
            product: c.omega.clone(),
            handedness: base.algebra.handedness,
        },
        module: Bimodule { space: base.module.space.clone(), left: c.mu.clone(), right: c.nu.clone() },
        anchor: c.theta.clone(),
    }
}

/// The three verdicts of the first-order deformation criterion.
#[derive(Clone, Debug)]
pub struct InfinitesimalReport {
    /// The cochain is a 2-cocycle with adjoint coefficients.
    pub cocycle: CheckReport,
    /// The cochain is itself an object structure.
    pub structure: CheckReport,
    /// The deformed structure is an object over `Q[lambda]/(lambda^3)`.
    pub deformation: CheckReport<Poly>,
}

impl InfinitesimalReport {
    pub fn cocycle_ok(&self) -> bool {
        self.cocycle.passed()
    }

    pub fn structure_ok(&self) -> bool {
        self.structure.passed()
    }

    pub fn deformation_ok(&self) -> bool {
        self.deformation.passed()
    }
}

/// Checks the first-order term of `d` three ways. `lambda^3` suffices: every
/// residual is at most quadratic in the cochain.
pub fn check_infinitesimal_deformation(d: &DeformationData) -> Result<InfinitesimalReport> {
    let c = d.first_order();
    check_shapes(&d.base, &c)?;
    let r = adjoint_representation_unchecked(&d.base);
    let cocycle = check_2_cocycle(&d.base, &r, &c);
    let structure = check_lm_object(&cochain_object(&d.base, &c));
    let deformed = deformed_structure(&DeformationData::infinitesimal(d.base.clone(), c), 2)?;
    let deformation = check_lm_object(&deformed);
    Ok(InfinitesimalReport { cocycle, structure, deformation })
}

/// Smallest power of `lambda` with a nonzero coefficient in a failing
/// item's defect.
pub fn defect_degree(item: &CheckItem<Poly>) -> Option<usize> {
    let w = item.witness.as_ref()?;
    w.defect.iter().filter_map(Poly::valuation).min()
}

/// `(N0: g -> g, N1: M -> M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NijenhuisPair {
    pub n0: Matrix,
    pub n1: Matrix,
}

impl NijenhuisPair {
    pub fn zero(o: &LmObject) -> Self {
        NijenhuisPair { n0: Matrix::zeros(o.n(), o.n()), n1: Matrix::zeros(o.m(), o.m()) }
    }

    pub fn scalar(o: &LmObject, c: Rational) -> Self {
        NijenhuisPair {
            n0: Matrix::identity(o.n()).scale(&c),
            n1: Matrix::identity(o.m()).scale(&c),
        }
    }

    pub fn identity(o: &LmObject) -> Self {
        Self::scalar(o, Rational::from(1))
    }

    pub fn as_cochain(&self) -> Cochain1 {
        Cochain1 { n0: self.n0.clone(), n1: self.n1.clone() }
    }

    fn check_shape(&self, o: &LmObject) -> Result<()> {
        let ok = (self.n0.rows(), self.n0.cols()) == (o.n(), o.n())
            && (self.n1.rows(), self.n1.cols()) == (o.m(), o.m());
        if ok {
            Ok(())
        } else {
            Err(Error::Shape(format!("a pair on this object is {0}x{0} and {1}x{1}", o.n(), o.m())))
        }
    }
}

fn basis(n: usize, i: usize) -> Vector {
    Vector::basis(n, i)
}

/// The deformed operations of a pair, written out from their definitions:
/// `x._N y = N0(x)y + xN0(y) - N0(xy)`,
/// `x._N m = N0(x).m + x.N1(m) - N1(x.m)`,
/// `m._N x = N1(m).x + m.N0(x) - N1(m.x)`,
/// `theta = f N1 - N0 f`.
pub fn nijenhuis_cochain(o: &LmObject, p: &NijenhuisPair) -> Result<Cochain2> {
    p.check_shape(o)?;
    let (n, m) = (o.n(), o.m());
    let (a, b) = (&o.algebra, &o.module);
    let (n0, n1) = (&p.n0, &p.n1);
    let omega = Multilinear::from_fn(&[n, n], n, |t| {
        let (x, y) = (basis(n, t[0]), basis(n, t[1]));
        a.mul(&n0.apply(&x), &y) + a.mul(&x, &n0.apply(&y)) - n0.apply(&a.mul(&x, &y))
    });
    let mu = Multilinear::from_fn(&[n, m], m, |t| {
        let (x, u) = (basis(n, t[0]), basis(m, t[1]));
        b.act_left(&n0.apply(&x), &u) + b.act_left(&x, &n1.apply(&u)) - n1.apply(&b.act_left(&x, &u))
    });
    let nu = Multilinear::from_fn(&[m, n], m, |t| {
        let (u, x) = (basis(m, t[0]), basis(n, t[1]));
        b.act_right(&n1.apply(&u), &x) + b.act_right(&u, &n0.apply(&x)) - n1.apply(&b.act_right(&u, &x))
    });
    let theta = o.anchor.compose(n1).sub(&n0.compose(&o.anchor));
    Ok(Cochain2 { omega, mu, nu, theta })
}

/// The four Nijenhuis conditions as items `image-in-kernel`, `product`,
/// `left-action`, `right-action`. The premise `f N1 = N0 f` and commuting
/// with the twists are advisories.
pub fn is_nijenhuis(o: &LmObject, p: &NijenhuisPair) -> Result<CheckReport> {
    let c = nijenhuis_cochain(o, p)?;
    let (n, m) = (o.n(), o.m());
    let (a, b) = (&o.algebra, &o.module);
    let (n0, n1) = (&p.n0, &p.n1);
    let c = &c;
    let mut rep = run(&[
        Residual::new("image-in-kernel", &[m], move |t| n0.apply(&c.theta.apply(&basis(m, t[0])))),
        Residual::new("product", &[n, n], move |t| {
            let (x, y) = (basis(n, t[0]), basis(n, t[1]));
            n0.apply(&c.omega.apply(&[&x, &y])) - a.mul(&n0.apply(&x), &n0.apply(&y))
        }),
        Residual::new("left-action", &[n, m], move |t| {
            let (x, u) = (basis(n, t[0]), basis(m, t[1]));
            n1.apply(&c.mu.apply(&[&x, &u])) - b.act_left(&n0.apply(&x), &n1.apply(&u))
        }),
        Residual::new("right-action", &[m, n], move |t| {
            let (u, x) = (basis(m, t[0]), basis(n, t[1]));
            n1.apply(&c.nu.apply(&[&u, &x])) - b.act_right(&n1.apply(&u), &n0.apply(&x))
        }),
    ]);
    let adv = run(&[
        Residual::new("anchor-premise", &[m], move |t| c.theta.apply(&basis(m, t[0]))),
        Residual::new("twist-commute-g", &[n], move |t| {
            let x = basis(n, t[0]);
            n0.apply(&a.twist(&x)) - a.twist(&n0.apply(&x))
        }),
        Residual::new("twist-commute-m", &[m], move |t| {
            let u = basis(m, t[0]);
            n1.apply(&b.twist(&u)) - b.twist(&n1.apply(&u))
        }),
    ]);
    rep.advisories.extend(adv.items);
    Ok(rep)
}

/// The first-order deformation generated by a Nijenhuis pair.
pub fn deformation_from_nijenhuis(o: &LmObject, p: &NijenhuisPair) -> Result<DeformationData> {
    let rep = is_nijenhuis(o, p)?;
    if !rep.passed() {
        return Err(Error::axiom("Nijenhuis pair", &rep));
    }
    Ok(DeformationData::infinitesimal(o.clone(), nijenhuis_cochain(o, p)?))
}

/// `Phi = id + lambda phi_1 + ...` on `g` and `Psi = id + lambda psi_1 + ...`
/// on `M`; the vectors hold the terms from `lambda^1` on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalMorphism {
    pub g_terms: Vec<Matrix>,
    pub m_terms: Vec<Matrix>,
}

impl FormalMorphism {
    /// `(id + lambda N0, id + lambda N1)`.
    pub fn from_pair(p: &NijenhuisPair) -> Self {
        FormalMorphism { g_terms: vec![p.n0.clone()], m_terms: vec![p.n1.clone()] }
    }

    pub fn truncated(&self, n: usize, m: usize, order: usize) -> LmMorphism<Poly> {
        let series = |dim: usize, terms: &[Matrix]| {
            let lift = |q: &Rational| Poly::constant(q.clone(), order);
            let mut acc = Matrix::<Rational>::identity(dim).map(lift);
            for (i, t) in terms.iter().enumerate().take(order) {
                acc = acc.add(&t.map(lift).scale(&Poly::monomial(Rational::from(1), i + 1, order)));
            }
            acc
        };
        LmMorphism { phi0: series(n, &self.g_terms), phi1: series(m, &self.m_terms) }
    }
}

/// Whether `t` is a morphism from the deformation `src` to the deformation
/// `dst` over `Q[lambda]/(lambda^(order+1))`. Items `anchor`, `product`,
/// `left-action`, `right-action`; commuting with the twists is advisory.
pub fn check_formal_morphism(
    src: &DeformationData,
    dst: &DeformationData,
    t: &FormalMorphism,
    order: usize,
) -> Result<CheckReport<Poly>> {
    let (n, m) = (src.base.n(), src.base.m());
    let shapes_ok = t.g_terms.iter().all(|a| (a.rows(), a.cols()) == (n, n))
        && t.m_terms.iter().all(|a| (a.rows(), a.cols()) == (m, m))
        && (dst.base.n(), dst.base.m()) == (n, m);
    if !shapes_ok {
        return Err(Error::Shape("formal morphism does not match the objects".into()));
    }
    let s = deformed_structure(src, order)?;
    let d = deformed_structure(dst, order)?;
    let raw = check_lm_morphism(&s, &d, &t.truncated(n, m, order));
    let mut rep = CheckReport::new();
    for (from, to) in [("anchor", "anchor"), ("hom-product", "product"), ("module-left", "left-action"), ("module-right", "right-action")] {
        let mut item = raw.item(from).expect("morphism item").clone();
        item.name = to.into();
        rep.push(item);
    }
    for (from, to) in [("hom-twist", "twist-g"), ("module-twist", "twist-m")] {
        let mut item = raw.item(from).expect("morphism item").clone();
        item.name = to.into();
        rep.push_advisory(item);
    }
    Ok(rep)
}

/// Whether `(id + lambda N0, id + lambda N1)` maps the deformed structure to
/// the base over `Q[lambda]/(lambda^3)`.
pub fn is_trivial_deformation(d: &DeformationData, p: &NijenhuisPair) -> Result<CheckReport<Poly>> {
    p.check_shape(&d.base)?;
    check_formal_morphism(d, &DeformationData::trivial(d.base.clone()), &FormalMorphism::from_pair(p), 2)
}

/// Every object identity at every order `0..=order`: item `order-k/<name>`
/// fails when the `lambda^k` coefficient of that residual is nonzero on some
/// basis tuple, with that coefficient as the defect.
pub fn check_formal_deformation(d: &DeformationData, order: usize) -> Result<CheckReport> {
    let obj = deformed_structure(d, order)?;
    let families = object_residuals(&obj);
    let mut per_order: Vec<Vec<CheckItem>> = vec![Vec::new(); order + 1];
    for fam in &families {
        let mut found: Vec<Option<Witness>> = vec![None; order + 1];
        for t in tuples(&fam.dims) {
            if found.iter().all(Option::is_some) {
                break;
            }
            let v = fam.eval(&t);
            for (k, slot) in found.iter_mut().enumerate() {
                if slot.is_none() {
                    let coeff = Vector(v.iter().map(|p| p.coeff(k)).collect());
                    if !coeff.is_zero() {
                        *slot = Some(Witness { tuple: t.clone(), defect: coeff });
                    }
                }
            }
        }
        for (k, w) in found.into_iter().enumerate() {
            let name = format!("order-{k}/{}", fam.name);
            per_order[k].push(match w {
                None => CheckItem::pass(name),
                Some(w) => CheckItem::fail(name, Some(w)),
            });
        }
    }
    let mut rep = CheckReport::new();
    for items in per_order {
        for i in items {
            rep.push(i);
        }
    }
    Ok(rep)
}

/// A degree-one cochain `c` with `a_1 - b_1 = D1 c`, if one exists. With
/// `compat` the search is restricted to cochains commuting with the twists.
pub fn deformations_equivalent_first_order(
    a: &DeformationData,
    b: &DeformationData,
    compat: bool,
) -> Result<Option<Cochain1>> {
    if a.base != b.base {
        return Err(Error::Shape("deformations of different objects".into()));
    }
    let o = &a.base;
    let r = adjoint_representation_unchecked(o);
    let diff = a.first_order().sub(&b.first_order());
    check_shapes(o, &diff)?;
    Complex::new(o, &r, compat)?.solve_d1(&diff)
}

/// Second cohomology with adjoint coefficients and the sufficient rigidity
/// criterion `H^2 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub h2: CohomologyDims,
    pub rigid_by_criterion: bool,
}

pub fn is_rigid(o: &LmObject, compat: bool) -> Result<RigidityReport> {
    let r = adjoint_representation_unchecked(o);
    let h2 = Complex::new(o, &r, compat)?.cohomology(2, D0Strategy::Zero)?;
    let rigid_by_criterion = h2.h == 0;
    Ok(RigidityReport { h2, rigid_by_criterion })
}

/// Seeded rejection sampling of pairs with entries in `{-1, 0, 1, 2}` that
/// pass [`is_nijenhuis`]. Half the draws use `N1 = N0` when `M` and `g` have
/// the same dimension. Returns at most `count` pairs.
pub fn random_nijenhuis_pairs(o: &LmObject, count: usize, seed: u64) -> Vec<NijenhuisPair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let draw = |rng: &mut ChaCha8Rng, k: usize| {
        let data = (0..k * k).map(|_| Rational::from(rng.gen_range(-1..=2i64))).collect();
        Matrix::from_vec(k, k, data).expect("square")
    };
    for _ in 0..20_000 {
        if out.len() == count {
            break;
        }
        let n0 = draw(&mut rng, o.n());
        let n1 = if o.n() == o.m() && rng.gen_bool(0.5) { n0.clone() } else { draw(&mut rng, o.m()) };
        let p = NijenhuisPair { n0, n1 };
        if is_nijenhuis(o, &p).map(|r| r.passed()).unwrap_or(false) && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Flat coordinates of a 2-cochain in the adjoint layout.
pub fn flatten2(c: &Cochain2) -> Vector {
    Vector(c.pieces().into_iter().flat_map(Multilinear::into_data).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::apply_d1;
    use crate::zoo;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn zero_cochain_gives_the_base() {
        let o = zoo::l2_adjoint();
        let d = DeformationData::trivial(o.clone());
        let s = deformed_structure(&d, 2).unwrap();
        assert_eq!(s, o.map(|c| Poly::constant(c.clone(), 2)));
        let rep = check_infinitesimal_deformation(&d).unwrap();
        assert!(rep.cocycle_ok() && rep.structure_ok() && rep.deformation_ok());
    }

    #[test]
    fn theta_only_on_zero_structure() {
        let o = zoo::zero_structure(1, 1);
        let mut c = zero_cochain(&o);
        c.theta = Matrix::diagonal(&[q(3)]);
        let s = deformed_structure(&DeformationData::infinitesimal(o, c), 2).unwrap();
        assert_eq!(s.anchor.get(0, 0), &Poly::monomial(q(3), 1, 2));
    }

    #[test]
    fn identity_pair_over_l2() {
        let o = zoo::l2_adjoint();
        let p = NijenhuisPair::identity(&o);
        assert!(is_nijenhuis(&o, &p).unwrap().passed());
        let d = deformation_from_nijenhuis(&o, &p).unwrap();
        let c = &d.series[0];
        assert_eq!(c.omega, o.algebra.product);
        assert!(c.theta.is_zero());
        let r = adjoint_representation_unchecked(&o);
        assert_eq!(*c, apply_d1(&o, &r, &p.as_cochain()));
        assert!(is_trivial_deformation(&d, &p).unwrap().passed());
    }

    #[test]
    fn scalar_pairs_pass() {
        for (_, o) in zoo::valid_objects() {
            for c in [0, 1, 3, -2] {
                let p = NijenhuisPair::scalar(&o, q(c));
                assert!(is_nijenhuis(&o, &p).unwrap().passed());
            }
        }
    }

    #[test]
    fn noncoboundary_is_not_trivial() {
        let o = zoo::zero_structure(1, 1);
        let mut c = zero_cochain(&o);
        c.theta = Matrix::diagonal(&[q(1)]);
        let d = DeformationData::infinitesimal(o.clone(), c);
        let rep = is_trivial_deformation(&d, &NijenhuisPair::identity(&o)).unwrap();
        let item = rep.item("anchor").unwrap();
        assert!(!item.passed);
        assert_eq!(defect_degree(item), Some(1));
        assert!(deformations_equivalent_first_order(&d, &DeformationData::trivial(o), true).unwrap().is_none());
    }

    #[test]
    fn rigid_sl2() {
        let rep = is_rigid(&zoo::sl2_bare(), true).unwrap();
        assert!(rep.rigid_by_criterion);
        assert!(!is_rigid(&zoo::zero_structure(1, 1), true).unwrap().rigid_by_criterion);
    }
}
