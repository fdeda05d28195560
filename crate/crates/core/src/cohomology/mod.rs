//! The complex `C^k((M, g, f), (V, W, phi))` in degrees one to three, its
//! coboundaries, cocycle conditions and cohomology dimensions, and the
//! Hom-Leibniz coboundary of a single algebra.

mod coboundary;
mod cochain;
mod complex;

pub use coboundary::{apply_d1, apply_d2, check_1_cocycle, check_2_cocycle, cs_coboundary};
pub use cochain::{
    layout, Cochain, Cochain1, Cochain2, Cochain3, CochainSpace, Dims, Piece, Slot, Target,
};
pub use complex::{cohomology_dim, CohomologyDims, Complex, D0Strategy};
