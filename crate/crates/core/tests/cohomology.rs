use hom_leibniz::cohomology::{
    apply_d1, apply_d2, check_1_cocycle, check_2_cocycle, Cochain1, Cochain2, Complex, D0Strategy,
    Dims,
};
use hom_leibniz::lmcat::adjoint_representation;
use hom_leibniz::zoo;
use hom_leibniz::{Matrix, Rational, Vector};
use serde_json::Value;

fn golden() -> Value {
    serde_json::from_str(include_str!("golden/cohomology.json")).unwrap()
}

fn triple(v: &Value) -> (usize, usize, usize) {
    let a: Vec<usize> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as usize)
        .collect();
    (a[0], a[1], a[2])
}

#[test]
fn zoo_matches_reference_numbers() {
    let g = golden();
    for (name, o) in zoo::valid_objects() {
        let want = &g[name];
        let r = adjoint_representation(&o).unwrap();
        let raw = Complex::new(&o, &r, false).unwrap();
        let dims: Vec<usize> = raw.spaces.iter().map(|s| s.raw_dim()).collect();
        assert_eq!(Value::from(dims), want["rawDims"], "{name}");
        let ranks = vec![raw.d1_raw().rank(), raw.d2_raw().rank()];
        assert_eq!(Value::from(ranks), want["rawRanks"], "{name}");
        let h2 = raw.cohomology(2, D0Strategy::Zero).unwrap();
        assert_eq!((h2.z, h2.b, h2.h), triple(&want["H2raw"]), "{name}");

        let cx = Complex::new(&o, &r, true).unwrap();
        let cdims: Vec<usize> = cx.spaces.iter().map(|s| s.dim()).collect();
        assert_eq!(Value::from(cdims), want["compatDims"], "{name}");
        let h2 = cx.cohomology(2, D0Strategy::Zero).unwrap();
        assert_eq!((h2.z, h2.b, h2.h), triple(&want["H2compat"]), "{name}");
        let h1 = cx.cohomology(1, D0Strategy::Zero).unwrap();
        assert_eq!((h1.z, h1.b, h1.h), triple(&want["H1compat"]), "{name}");
        assert!(
            cx.d2().unwrap().compose(&cx.d1().unwrap()).is_zero(),
            "{name}"
        );
    }
}

#[test]
fn zero_structure_examples() {
    let o = zoo::zero_structure(1, 1);
    let r = adjoint_representation(&o).unwrap();
    let cx = Complex::new(&o, &r, false).unwrap();
    assert_eq!((cx.d1_raw().rows(), cx.d1_raw().cols()), (4, 2));
    assert_eq!((cx.d2_raw().rows(), cx.d2_raw().cols()), (6, 4));
    assert!(cx.d1_raw().is_zero() && cx.d2_raw().is_zero());
    let h = hom_leibniz::cohomology::cohomology_dim(&o, &r, 2, true).unwrap();
    assert_eq!((h.z, h.b, h.h), (4, 0, 4));
}

#[test]
fn identity_pair_on_l2_gives_the_product() {
    let o = zoo::l2_adjoint();
    let r = adjoint_representation(&o).unwrap();
    let c = Cochain1 {
        n0: Matrix::identity(2),
        n1: Matrix::identity(2),
    };
    let d = apply_d1(&o, &r, &c);
    assert_eq!(d.omega, o.algebra.product);
    assert!(d.theta.is_zero());
    assert_eq!(check_1_cocycle(&o, &r, &c).passed(), d.is_zero());
    assert!(apply_d2(&o, &r, &d).is_zero());
    assert!(check_2_cocycle(&o, &r, &d).passed());
}

#[test]
fn theta_only_cochain_is_a_cocycle_on_zero_structure() {
    let o = zoo::zero_structure(2, 1);
    let r = adjoint_representation(&o).unwrap();
    let mut c = Cochain2::zero(Dims::of(&o, &r));
    c.theta = Matrix::from_columns(2, &[Vector(vec![Rational::from(3), Rational::new(-1, 2)])]);
    assert!(check_2_cocycle(&o, &r, &c).passed());
    assert!(apply_d2(&o, &r, &c).is_zero());
}

#[test]
fn negative_adjoint_d0_is_checked_before_use() {
    // identity twists: D1 D0 = 0 follows from the Leibniz identity
    let o = zoo::l2_adjoint();
    let r = adjoint_representation(&o).unwrap();
    let cx = Complex::new(&o, &r, true).unwrap();
    let h = cx.cohomology(1, D0Strategy::NegativeAdjoint).unwrap();
    assert_eq!(h.z, 2);
    assert_eq!(h.b + h.h, 2);
}
