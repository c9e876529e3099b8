//! Mersenne, k-Mersenne, Gaussian Mersenne and Mersenne polynomial families,
//! computed exactly, with checkers for their identities.
//!
//! Values live in three exact domains: [`arith::Integer`] for plain numbers,
//! [`arith::GaussianDyadic`] for Gaussian values (whose index-0 term is
//! `-i/2`) and [`arith::Poly`] for polynomials over either.

pub mod arith;
pub mod cli;

pub mod error;
pub mod identities;
pub mod polynomials;
pub mod sequences;

pub use arith::{GaussianDyadic, GaussianPolynomial, IntPolynomial, Integer};
pub use error::{Error, Result};
pub use sequences::{decompose, seq_stream, Decomposition, FamilyTag, SeqStream, Term};
