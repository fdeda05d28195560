//! Compiles and runs every Rust block of the guide in `book/src` as a
//! doctest, one module per chapter so a failure points at its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/linear-algebra.md")]
pub mod linear_algebra {}
#[doc = include_str!("../../../book/src/algebras.md")]
pub mod algebras {}
#[doc = include_str!("../../../book/src/objects.md")]
pub mod objects {}
#[doc = include_str!("../../../book/src/dialgebras.md")]
pub mod dialgebras {}
#[doc = include_str!("../../../book/src/cohomology.md")]
pub mod cohomology {}
#[doc = include_str!("../../../book/src/deformations.md")]
pub mod deformations {}
#[doc = include_str!("../../../book/src/extensions.md")]
pub mod extensions {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
