//! Coefficient rings.
//!
//! Structure tensors and axiom checkers are generic over [`Scalar`], a
//! commutative ring with exact equality. Linear algebra (elimination,
//! nullspaces) additionally needs [`Field`]. The rationals are the only field
//! in the crate; truncated polynomials over the rationals are the only other
//! ring and exist to evaluate deformed structures.

use std::fmt;
use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

use crate::qlinalg::Rational;

pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
    /// Embeds a rational constant.
    fn from_rational(q: &Rational) -> Self;
}

pub trait Field: Scalar {
    fn inv(&self) -> Option<Self>;
}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        Rational::inv(self)
    }
}
