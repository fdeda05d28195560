//! Small exactly-verified instances used as fixtures.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::homcore::{
    endomorphism_residual, yau_twist, Bimodule, Handedness, HomAlgebra, HomSpace,
};
use crate::lmcat::{tensor_square_unchecked, LmObject};
use crate::qlinalg::{Matrix, Rational, Vector};
use crate::tensor::Multilinear;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn algebra(n: usize, products: &[(usize, usize, &[i64])]) -> HomAlgebra {
    let mut t = Multilinear::zeros(&[n, n], n);
    for &(i, j, v) in products {
        t.set(&[i, j], &Vector(v.iter().map(|&c| q(c)).collect()));
    }
    HomAlgebra::new(HomSpace::identity("e", n), t, Handedness::Left).unwrap()
}

/// Two-dimensional, `e1 e1 = e2`, identity twist. Both left and right Leibniz.
pub fn l2() -> HomAlgebra {
    algebra(2, &[(0, 0, &[0, 1])])
}

/// [`l2`] twisted along `diag(2, 4)`: `e1 e1 = 4 e2`.
pub fn l2_yau() -> HomAlgebra {
    yau_twist(&l2(), &Matrix::diagonal(&[q(2), q(4)])).unwrap()
}

/// The two-dimensional non-abelian Lie algebra, `[e1, e2] = e2`.
pub fn r2() -> HomAlgebra {
    algebra(2, &[(0, 1, &[0, 1]), (1, 0, &[0, -1])])
}

/// `e2 e1 = e1`: left Leibniz, not a Lie algebra.
pub fn leibniz_a() -> HomAlgebra {
    algebra(2, &[(1, 0, &[1, 0])])
}

/// `sl2` in the basis `e, h, f`.
pub fn sl2() -> HomAlgebra {
    // [h,e] = 2e, [h,f] = -2f, [e,f] = h
    algebra(
        3,
        &[
            (1, 0, &[2, 0, 0]),
            (0, 1, &[-2, 0, 0]),
            (1, 2, &[0, 0, -2]),
            (2, 1, &[0, 0, 2]),
            (0, 2, &[0, 1, 0]),
            (2, 0, &[0, -1, 0]),
        ],
    )
}

/// Abelian `g` of dimension `n`, trivial `M` of dimension `m`, zero anchor,
/// identity twists.
pub fn zero_structure(n: usize, m: usize) -> LmObject {
    let a = HomAlgebra::abelian(HomSpace::identity("e", n), Handedness::Left);
    let module = Bimodule::trivial(HomSpace::identity("m", m), n);
    LmObject::new(a, module, Matrix::zeros(n, m)).unwrap()
}

pub fn l2_adjoint() -> LmObject {
    LmObject::adjoint(&l2())
}

pub fn l2_yau_adjoint() -> LmObject {
    LmObject::adjoint(&l2_yau())
}

/// `g = sl2`, `M = 0`.
pub fn sl2_bare() -> LmObject {
    let a = sl2();
    let module = Bimodule::trivial(HomSpace::identity("m", 0), 3);
    LmObject::new(a, module, Matrix::zeros(3, 0)).unwrap()
}

/// The tensor-square construction on [`l2`], as built (it is not a valid
/// object; see the checker).
pub fn tensor_square_l2() -> LmObject {
    tensor_square_unchecked(&l2())
}

/// Named fixtures, valid ones only.
pub fn valid_objects() -> Vec<(&'static str, LmObject)> {
    vec![
        ("zero(1,1)", zero_structure(1, 1)),
        ("zero(2,1)", zero_structure(2, 1)),
        ("l2-adjoint", l2_adjoint()),
        ("l2-yau-adjoint", l2_yau_adjoint()),
        ("r2-adjoint", LmObject::adjoint(&r2())),
        ("leibniz-a-adjoint", LmObject::adjoint(&leibniz_a())),
        ("sl2-bare", sl2_bare()),
        ("sl2-adjoint", LmObject::adjoint(&sl2())),
    ]
}

fn small(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.gen_range(-3..=3);
    let d: i64 = *[1, 1, 1, 2].choose(rng).unwrap();
    Rational::new(n, d)
}

/// A random endomorphism of one of the untwisted two-dimensional algebras,
/// drawn from the families that solve the endomorphism equations.
fn random_endo(base: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let a = small(rng);
    let b = small(rng);
    let c = small(rng);
    // Columns are images of e1, e2.
    let cols = match base {
        // e1 -> a e1 + b e2, e2 -> a^2 e2
        0 => [[a.clone(), b], [q(0), a.clone() * a]],
        // e1 -> a e1 + c e2, e2 -> d e2 with d (a - 1) = 0
        1 => {
            if rng.gen_bool(0.5) {
                [[q(1), c], [q(0), b]]
            } else {
                [[a, c], [q(0), q(0)]]
            }
        }
        // e1 -> a e1, e2 -> b e1 + d e2 with a (d - 1) = 0, d b = 0
        _ => {
            if rng.gen_bool(0.5) {
                [[a, q(0)], [q(0), q(1)]]
            } else {
                [[q(0), q(0)], [b, q(0)]]
            }
        }
    };
    Matrix::from_columns(
        2,
        &cols.iter().map(|c| Vector(c.to_vec())).collect::<Vec<_>>(),
    )
}

/// Adjoint object of a seeded Yau twist of `l2`, `r2` or [`leibniz_a`].
pub fn random_yau(seed: u64) -> LmObject {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base_idx = rng.gen_range(0..3);
    let base = [l2(), r2(), leibniz_a()][base_idx].clone();
    let endo = random_endo(base_idx, &mut rng);
    debug_assert!(
        endomorphism_residual(&base, &endo).check().passed,
        "{endo:?}"
    );
    LmObject::adjoint(&yau_twist(&base, &endo).expect("sampled an endomorphism"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homcore::{check_left_hom_leibniz, check_multiplicativity};
    use crate::lmcat::check_lm_object;

    #[test]
    fn fixtures_are_valid() {
        for (name, o) in valid_objects() {
            assert!(check_lm_object(&o).passed(), "{name}");
        }
        assert!(check_left_hom_leibniz(&sl2()).passed());
    }

    #[test]
    fn random_twists_are_multiplicative_and_valid() {
        for seed in 0..50 {
            let o = random_yau(seed);
            assert!(check_multiplicativity(&o.algebra).passed(), "seed {seed}");
            assert!(check_lm_object(&o).passed(), "seed {seed}");
        }
    }
}
