//! Exact computational commutative algebra for splitting rings of even
//! polynomials, periplectic determinantal varieties, and their graded Betti
//! tables.
//!
//! Everything is computed over exact rationals (or dual numbers / multivariate
//! polynomials over them); no floating point is used anywhere. The main
//! entry points:
//!
//! - [`splitrings`]: signed, type-D, generalized, and factorization-ring
//!   presentations, their ranks, discriminants and Weyl symmetries.
//! - [`detvar`]: the skew/symmetric pair variety `Z`, its invariants
//!   (`chi-bar`, `Phi`, discriminants), exact point sampling, the `Z'` cover
//!   ideal, and first-order (dual-number) probes.
//! - [`jpw`]: closed-form graded Betti tables and cohomology series from the
//!   Schur-functor enumeration, cross-validated against
//!   [`groebner::koszul_betti`].
//! - [`groebner`]: Buchberger bases, Hilbert series, elimination, and a
//!   strand-by-strand Koszul-homology computation of Tor tables.
//! - [`acceptance`]: the self-contained verification suite shared by
//!   `cargo test` and the CLI.

pub mod acceptance;
pub mod detvar;
pub mod error;
pub mod groebner;
pub mod jpw;
pub mod matrix;
pub mod poly;
pub mod rat;
pub mod splitrings;

pub use error::{Error, Result};
pub use rat::{DualRat, Rat};
