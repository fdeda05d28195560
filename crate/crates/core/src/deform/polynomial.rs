use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::qlinalg::Rational;
use crate::scalar::Scalar;

/// An element of `Q[lambda]/(lambda^(N+1))`.
///
/// The truncation order travels with the value as `coeffs.len() - 1`, and
/// arithmetic truncates at the larger order of its operands. Constants
/// (`zero`, `one`, embedded rationals) have order 0 and therefore adapt to
/// whatever they are combined with, which is what lets the generic tensor
/// code build zero vectors without knowing `N`. Equality ignores trailing
/// zeros.
#[derive(Clone)]
pub struct TruncatedPolynomial {
    coeffs: Vec<Rational>,
}

pub type Poly = TruncatedPolynomial;

impl TruncatedPolynomial {
    /// Coefficients of `lambda^0 .. lambda^order`; missing ones are zero,
    /// extra ones are dropped.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedPolynomial { coeffs }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `c lambda^k` at the given order.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        TruncatedPolynomial { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `lambda^k`, zero past the truncation.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Lowest `k` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| f(&self.coeff(k), &rhs.coeff(k))).collect();
        TruncatedPolynomial { coeffs }
    }
}

impl PartialEq for TruncatedPolynomial {
    fn eq(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl Eq for TruncatedPolynomial {}

impl Add for TruncatedPolynomial {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.zip(&rhs, |a, b| a + b)
    }
}

impl Sub for TruncatedPolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.zip(&rhs, |a, b| a - b)
    }
}

impl Neg for TruncatedPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        TruncatedPolynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Mul for TruncatedPolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        TruncatedPolynomial { coeffs }
    }
}

impl Zero for TruncatedPolynomial {
    fn zero() -> Self {
        TruncatedPolynomial { coeffs: vec![Rational::zero()] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for TruncatedPolynomial {
    fn one() -> Self {
        TruncatedPolynomial { coeffs: vec![Rational::one()] }
    }
}

impl Scalar for TruncatedPolynomial {
    fn from_rational(q: &Rational) -> Self {
        TruncatedPolynomial { coeffs: vec![q.clone()] }
    }
}

impl fmt::Display for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}\u{3bb}"),
                _ => format!("{c}\u{3bb}^{k}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl fmt::Debug for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} mod \u{3bb}^{}", self.order() + 1)
    }
}
