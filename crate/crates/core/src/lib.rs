//! Exact Gaussian moment functionals and a harness for probing whether
//! vanishing moments `E[P^m] = 0` force `E[P^m Q] = 0` for large `m`.
//!
//! Everything is computed over ℚ(i) (and ℚ(i) ⊕ ℚ(i)π for the half-disk
//! integral); no floating point enters any result.

pub mod cli;
pub mod combinat;
pub mod error;
pub mod functionals;
pub mod harness;
pub mod io;
pub mod poly;
pub mod random;
pub mod scalar;
pub mod selftest;

pub use error::{Error, Result};
pub use functionals::FunctionalKind;
pub use poly::{AnyPoly, LaurentPoly, MPoly};
pub use scalar::{ExactValue, GaussRat, PiScalar};
