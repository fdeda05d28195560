//! Exact rational scalars, dense matrices and subspaces.

mod matrix;
mod rational;
mod subspace;
mod vector;

pub use matrix::{Matrix, Rref};
pub use rational::Rational;
pub use subspace::{quotient_dim, Subspace};
pub use vector::Vector;
