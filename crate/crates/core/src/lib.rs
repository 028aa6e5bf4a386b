//! Exact classification of diagonalizable and unitary irreducible
//! lowest-weight modules `L_c(λ)` for the rational Cherednik algebra of
//! the complex reflection group `G(r,1,n)`, with a brute-force oracle.

pub mod character;
pub mod classify;
pub mod error;
pub mod gamma;
pub mod oracle;
pub mod params;
pub mod rational;
pub mod shapes;

pub use error::{Error, Result};
pub use rational::Rational;
