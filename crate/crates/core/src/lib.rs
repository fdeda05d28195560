//! Exact structure-constant computations for Hom-Leibniz algebras and their
//! objects, representations, cohomology, deformations and abelian extensions
//! in the category of linear maps.
//!
//! Every structure is stored densely over the rationals (or over truncated
//! polynomials in a deformation parameter) and every axiom is checked by
//! enumerating basis tuples.

pub mod cohomology;
pub mod deform;
pub mod dialg;
pub mod error;
pub mod extensions;
pub mod homcore;
pub mod lmcat;
pub mod qlinalg;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod zoo;

pub use error::{Error, Result};
pub use qlinalg::{Matrix, Rational, Subspace, Vector};
pub use scalar::{Field, Scalar};
