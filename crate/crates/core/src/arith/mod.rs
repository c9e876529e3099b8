//! Exact arithmetic kernel.
//!
//! Three value domains cover every quantity the sequence families produce:
//!
//! * [`Integer`]: arbitrary precision signed integers (`Mₙ`, `Mₙ⁽ᵏ⁾`).
//! * [`GaussianDyadic`]: `(a + b·i) / 2^e`, the smallest exact domain that
//!   holds `GM₀ = -i/2` and all of its powers.
//! * [`Poly`]: dense polynomials in `x` over either of the above. The
//!   Gaussian instance doubles as the universal carrier for identity
//!   residuals.
//!
//! Every value is kept in canonical form, so structural equality is
//! mathematical equality.

mod dyadic;
mod poly;

pub use dyadic::GaussianDyadic;
pub use poly::{Degree, GaussianPolynomial, IntPolynomial, Poly};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary precision signed integer.
pub type Integer = BigInt;

/// Commutative ring operations needed by [`Poly`] and [`pow`].
///
/// Methods take references so big values are never cloned just to be read.
pub trait Coefficient: Clone + Eq + std::fmt::Debug + Zero + One {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Coefficient for BigInt {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Binary exponentiation: `O(log e)` ring multiplications.
///
/// `pow(x, 0)` is one for every `x`, zero included.
pub fn pow<C: Coefficient>(base: &C, mut exp: u64) -> C {
    let mut acc = C::one();
    if exp == 0 {
        return acc;
    }
    let mut square = base.clone();
    loop {
        if exp & 1 == 1 {
            acc = acc.mul_ref(&square);
        }
        exp >>= 1;
        if exp == 0 {
            return acc;
        }
        square = square.mul_ref(&square);
    }
}
