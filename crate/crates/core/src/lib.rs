//! Exact computation and verification of identities generated by integer
//! compositions: signed composition sums of binomial products, Stirling
//! numbers of the first kind, and the elementary/complete symmetric-function
//! duality together with its q-analogue and Bernoulli specialisations.
//!
//! Everything is exact. Scalars are arbitrary-precision integers and
//! rationals, polynomials are dense over the rationals, and rational
//! functions are kept reduced with a monic denominator so that equality is
//! structural.

pub mod cli;
pub mod compositions;
pub mod error;
pub mod exact_arith;
pub mod identities;
pub mod poly;
pub mod random;
pub mod ring;
pub mod stirling;
pub mod symfun;

pub use error::{Error, Result};
pub use exact_arith::{Integer, Rational};
pub use poly::{Polynomial, RationalFunction};
pub use ring::{Field, Ring};
