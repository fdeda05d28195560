use hom_leibniz::cohomology::Complex;
use hom_leibniz::homcore::{
    check_algebra, check_multiplicativity, endomorphism_residual, semidirect_product, yau_twist, Bimodule,
    Handedness, HomAlgebra, HomSpace,
};
use hom_leibniz::lmcat::{adjoint_representation, check_lm_object};
use hom_leibniz::tensor::Multilinear;
use hom_leibniz::{zoo, Matrix, Rational, Vector};
use proptest::prelude::*;

fn small() -> impl Strategy<Value = Rational> {
    (-3i64..=3, 1i64..=2).prop_map(|(p, q)| Rational::new(p, q))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(small(), rows * cols).prop_map(move |d| Matrix::from_vec(rows, cols, d).unwrap())
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix(r, c))
}

fn algebra(n: usize) -> impl Strategy<Value = HomAlgebra> {
    (prop::collection::vec(-1i64..=1, n * n * n), matrix(n, n)).prop_map(move |(c, alpha)| {
        let data = c.into_iter().map(Rational::from_integer).collect();
        let product = Multilinear::from_flat(&[n, n], n, data).unwrap();
        HomAlgebra::new(HomSpace::new(vec!["a".into(), "b".into()], alpha).unwrap(), product, Handedness::Left).unwrap()
    })
}

proptest! {
    #[test]
    fn rank_plus_nullity_is_the_column_count(a in any_matrix()) {
        prop_assert_eq!(a.rank() + a.nullspace().dim(), a.cols());
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn nullspace_vectors_are_killed(a in any_matrix()) {
        for v in a.nullspace().basis() {
            prop_assert!(a.apply(v).is_zero());
        }
    }

    #[test]
    fn rref_is_idempotent_with_unit_pivots(a in any_matrix()) {
        let r = a.rref();
        prop_assert_eq!(&r.form.rref().form, &r.form);
        for (row, &c) in r.pivot_cols.iter().enumerate() {
            prop_assert_eq!(r.form.get(row, c), &Rational::from_integer(1));
        }
    }

    #[test]
    fn solve_finds_reachable_right_hand_sides(a in any_matrix(), seed in prop::collection::vec(small(), 4)) {
        let x = Vector(seed[..a.cols()].to_vec());
        let b = a.apply(&x);
        let y = a.solve(&b).unwrap().expect("b is in the column space");
        prop_assert_eq!(a.apply(&y), b);
    }

    #[test]
    fn solve_refuses_exactly_the_unreachable(a in any_matrix(), b in prop::collection::vec(small(), 4)) {
        let b = Vector(b[..a.rows()].to_vec());
        let reachable = a.column_space().contains(&b);
        match a.solve(&b).unwrap() {
            Some(x) => prop_assert_eq!(a.apply(&x), b),
            None => prop_assert!(!reachable),
        }
    }

    #[test]
    fn opposite_swaps_the_verdicts(a in algebra(2)) {
        let op = a.opposite();
        prop_assert_eq!(op.handedness, Handedness::Right);
        prop_assert_eq!(check_algebra(&a).passed(), check_algebra(&op).passed());
        prop_assert_eq!(op.opposite(), a);
    }

    #[test]
    fn yau_twists_exist_exactly_along_endomorphisms(e in matrix(2, 2), base in 0usize..3) {
        let a = [zoo::l2(), zoo::r2(), zoo::leibniz_a()][base].clone();
        let is_endo = endomorphism_residual(&a, &e).check().passed;
        match yau_twist(&a, &e) {
            Ok(t) => {
                prop_assert!(is_endo);
                prop_assert!(check_algebra(&t).passed());
                prop_assert!(check_multiplicativity(&t).passed());
            }
            Err(_) => prop_assert!(!is_endo),
        }
    }

    #[test]
    fn semidirect_with_the_adjoint_module_is_an_algebra(seed in 0u64..500) {
        let o = zoo::random_yau(seed);
        let s = semidirect_product(&o.algebra, &Bimodule::adjoint(&o.algebra)).unwrap();
        prop_assert_eq!(s.dim(), 2 * o.n());
        prop_assert!(check_algebra(&s).passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn coboundary_squares_to_zero_on_compatible_cochains(seed in 0u64..500) {
        let o = zoo::random_yau(seed);
        prop_assert!(check_lm_object(&o).passed());
        let r = adjoint_representation(&o).unwrap();
        let cx = Complex::new(&o, &r, true).unwrap();
        prop_assert!(cx.d2_d1_on_working().is_zero());
    }
}
