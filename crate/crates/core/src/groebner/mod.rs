//! Exact Groebner-basis machinery over the rationals: monomial orders,
//! Buchberger's algorithm with the product and chain criteria, staircase
//! dimension counts, weighted Hilbert series, variable elimination, and a
//! blockwise Koszul homology engine for graded Betti numbers.

mod buchberger;
mod hilbert;
mod koszul;
pub(crate) mod linalg;
mod order;

pub use buchberger::{groebner, Budget, GroebnerBasis};
pub use hilbert::{hilbert_numerator, hilbert_series_truncated, quotient_dimension, QuotientDim};
pub use koszul::{koszul_betti, BettiTable, KoszulInput};
pub use order::Order;
