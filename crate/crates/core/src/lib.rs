//! Exact computer algebra for Riordan arrays.
//!
//! Truncated power series over the rationals, Riordan pairs and their
//! matrices, Chebyshev/Dickson/Fibonacci/Lucas polynomial families, the two
//! families of companion-series transformations, and the Fibonacci bases
//! together with their generalizations. Everything is exact unless a check
//! is explicitly numeric.

pub mod error;
pub mod fibbasis;
pub mod fps;
pub mod matrix;
pub mod polyfam;
pub mod riordan;
pub mod suite;
pub mod transforms;

pub use error::{Error, Result};
pub use fps::{Poly, Rational, Series};
