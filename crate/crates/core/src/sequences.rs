//! Number-valued families: Mersenne `Mₙ`, generalized k-Mersenne `Mₙ⁽ᵏ⁾`,
//! Gaussian Mersenne `GMₙ` and generalized k-Gaussian Mersenne `GMₙ⁽ᵏ⁾`.
//!
//! Each family has a fast path (closed form or product relation) and an
//! independent linear-recurrence oracle. [`seq_stream`] generates prefixes
//! of any of the four families, the polynomial ones included.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{self, Coefficient, GaussianDyadic, GaussianPolynomial, IntPolynomial};
use crate::error::{Error, Result};
use crate::polynomials;

/// Largest index accepted by the number-valued families.
pub const MAX_INDEX: u64 = 1 << 32;

pub(crate) fn check_index(n: u64, max: u64) -> Result<()> {
    if n > max {
        Err(Error::IndexTooLarge { index: n, max })
    } else {
        Ok(())
    }
}

/// The four families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    /// Mersenne numbers.
    M,
    /// Gaussian Mersenne numbers.
    GM,
    /// Mersenne polynomials.
    MP,
    /// Gaussian Mersenne polynomials.
    GMP,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 4] = [FamilyTag::M, FamilyTag::GM, FamilyTag::MP, FamilyTag::GMP];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::M => "M",
            FamilyTag::GM => "GM",
            FamilyTag::MP => "MP",
            FamilyTag::GMP => "GMP",
        }
    }

    pub fn is_polynomial(self) -> bool {
        matches!(self, FamilyTag::MP | FamilyTag::GMP)
    }

    pub fn is_gaussian(self) -> bool {
        matches!(self, FamilyTag::GM | FamilyTag::GMP)
    }

    /// Term `n` of the k-generalized family (`k = 1` gives the base family).
    pub fn term(self, n: u64, k: u64) -> Result<Term> {
        Ok(match self {
            FamilyTag::M => Term::Integer(k_mersenne(n, k)?),
            FamilyTag::GM => Term::Gaussian(k_gaussian_mersenne(n, k)?),
            FamilyTag::MP => Term::IntPoly(polynomials::k_mersenne_poly(n, k)?),
            FamilyTag::GMP => Term::GaussianPoly(polynomials::k_gaussian_mersenne_poly(n, k)?),
        })
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for FamilyTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "M" => Ok(FamilyTag::M),
            "GM" => Ok(FamilyTag::GM),
            "MP" => Ok(FamilyTag::MP),
            "GMP" => Ok(FamilyTag::GMP),
            _ => Err(format!(
                "unknown family {s:?}; expected one of M, GM, MP, GMP"
            )),
        }
    }
}

/// A single family value in its natural domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Integer(BigInt),
    Gaussian(GaussianDyadic),
    IntPoly(IntPolynomial),
    GaussianPoly(GaussianPolynomial),
}

impl Term {
    /// Embeds the value as a degree-0 (or higher) Gaussian polynomial.
    pub fn to_polynomial(&self) -> GaussianPolynomial {
        match self {
            Term::Integer(n) => {
                GaussianPolynomial::constant(GaussianDyadic::from_integer(n.clone()))
            }
            Term::Gaussian(g) => GaussianPolynomial::constant(g.clone()),
            Term::IntPoly(p) => p.to_gaussian(),
            Term::GaussianPoly(p) => p.clone(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Integer(n) => write!(f, "{n}"),
            Term::Gaussian(g) => write!(f, "{g}"),
            Term::IntPoly(p) => write!(f, "{p}"),
            Term::GaussianPoly(p) => write!(f, "{p}"),
        }
    }
}

impl From<BigInt> for Term {
    fn from(v: BigInt) -> Self {
        Term::Integer(v)
    }
}

impl From<GaussianDyadic> for Term {
    fn from(v: GaussianDyadic) -> Self {
        Term::Gaussian(v)
    }
}

impl From<IntPolynomial> for Term {
    fn from(v: IntPolynomial) -> Self {
        Term::IntPoly(v)
    }
}

impl From<GaussianPolynomial> for Term {
    fn from(v: GaussianPolynomial) -> Self {
        Term::GaussianPoly(v)
    }
}

/// Unique `(s, r)` with `n = s·k + r` and `0 <= r < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub s: u64,
    pub r: u64,
}

pub fn decompose(n: u64, k: u64) -> Result<Decomposition> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    Ok(Decomposition { s: n / k, r: n % k })
}

/// Second-order recurrence `T_{j+2} = c·T_{j+1} - 2·T_j` over any ring.
///
/// Yields `T_0, T_1, ...`; the multiplier is `3` for the number families
/// and `3x` for the polynomial ones.
#[derive(Debug, Clone)]
pub(crate) struct Recurrence<C> {
    prev: C,
    cur: C,
    multiplier: C,
    two: C,
}

impl<C: Coefficient> Recurrence<C> {
    pub(crate) fn new(seed0: C, seed1: C, multiplier: C) -> Self {
        Self {
            prev: seed0,
            cur: seed1,
            multiplier,
            two: C::one().add_ref(&C::one()),
        }
    }

    /// Advances `n` steps and returns `(T_n, T_{n+1})`.
    pub(crate) fn pair_at(mut self, n: u64) -> (C, C) {
        for _ in 0..n {
            self.step();
        }
        (self.prev, self.cur)
    }

    fn step(&mut self) {
        let next = self
            .multiplier
            .mul_ref(&self.cur)
            .sub_ref(&self.two.mul_ref(&self.prev));
        self.prev = std::mem::replace(&mut self.cur, next);
    }
}

impl<C: Coefficient> Iterator for Recurrence<C> {
    type Item = C;

    fn next(&mut self) -> Option<C> {
        let out = self.prev.clone();
        self.step();
        Some(out)
    }
}

fn mersenne_recurrence() -> Recurrence<BigInt> {
    Recurrence::new(BigInt::from(0), BigInt::one(), BigInt::from(3))
}

pub(crate) fn gaussian_seed() -> GaussianDyadic {
    // -i/2
    GaussianDyadic::new(BigInt::from(0), BigInt::from(-1), 1)
}

fn gaussian_recurrence() -> Recurrence<GaussianDyadic> {
    Recurrence::new(
        gaussian_seed(),
        GaussianDyadic::one(),
        GaussianDyadic::from(3),
    )
}

/// `Mₙ = 2ⁿ - 1`, with `2ⁿ` computed by binary exponentiation.
pub fn mersenne(n: u64) -> Result<BigInt> {
    check_index(n, MAX_INDEX)?;
    Ok(arith::pow(&BigInt::from(2), n) - 1)
}

/// `Mₙ` by iterating `M_{j+2} = 3M_{j+1} - 2M_j` from `M₀ = 0, M₁ = 1`.
///
/// Linear in `n`; exists as an independent check of [`mersenne`].
pub fn mersenne_oracle(n: u64) -> Result<BigInt> {
    check_index(n, MAX_INDEX)?;
    Ok(mersenne_recurrence().pair_at(n).0)
}

/// `Mₙ⁽ᵏ⁾ = M_s^{k-r} · M_{s+1}^r` where `n = s·k + r`.
pub fn k_mersenne(n: u64, k: u64) -> Result<BigInt> {
    check_index(n, MAX_INDEX)?;
    let Decomposition { s, r } = decompose(n, k)?;
    if k == 1 {
        return mersenne(n);
    }
    Ok(arith::pow(&mersenne(s)?, k - r) * arith::pow(&mersenne(s + 1)?, r))
}

/// `GMₙ = (2ⁿ - 1) + i(2ⁿ⁻¹ - 1)` evaluated exactly for every `n`.
///
/// At `n = 0` the dyadic `2⁻¹` gives `-i/2`, which is the recurrence seed.
pub fn gaussian_mersenne(n: u64) -> Result<GaussianDyadic> {
    check_index(n, MAX_INDEX)?;
    let one = GaussianDyadic::one();
    let re = &GaussianDyadic::two_pow(n as i64) - &one;
    let im = &GaussianDyadic::two_pow(n as i64 - 1) - &one;
    Ok(re + im * GaussianDyadic::i())
}

/// `GMₙ` by iterating the recurrence from `GM₀ = -i/2, GM₁ = 1`.
pub fn gaussian_mersenne_oracle(n: u64) -> Result<GaussianDyadic> {
    check_index(n, MAX_INDEX)?;
    Ok(gaussian_recurrence().pair_at(n).0)
}

/// `GMₙ⁽ᵏ⁾ = GM_s^{k-r} · GM_{s+1}^r` where `n = s·k + r`.
pub fn k_gaussian_mersenne(n: u64, k: u64) -> Result<GaussianDyadic> {
    check_index(n, MAX_INDEX)?;
    let Decomposition { s, r } = decompose(n, k)?;
    if k == 1 {
        return gaussian_mersenne(n);
    }
    Ok(gaussian_mersenne(s)?.pow(k - r) * gaussian_mersenne(s + 1)?.pow(r))
}

/// Streams `T⁽ᵏ⁾_0, T⁽ᵏ⁾_1, ...` from one pass over the base recurrence.
struct KStream<C> {
    base: Recurrence<C>,
    k: u64,
    r: u64,
    lo: C,
    hi: C,
}

impl<C: Coefficient> KStream<C> {
    fn new(mut base: Recurrence<C>, k: u64) -> Self {
        let lo = base.next().expect("recurrence is infinite");
        let hi = base.next().expect("recurrence is infinite");
        Self {
            base,
            k,
            r: 0,
            lo,
            hi,
        }
    }
}

impl<C: Coefficient> Iterator for KStream<C> {
    type Item = C;

    fn next(&mut self) -> Option<C> {
        if self.r == self.k {
            self.r = 0;
            let next = self.base.next().expect("recurrence is infinite");
            self.lo = std::mem::replace(&mut self.hi, next);
        }
        let out = if self.k == 1 {
            self.lo.clone()
        } else {
            arith::pow(&self.lo, self.k - self.r).mul_ref(&arith::pow(&self.hi, self.r))
        };
        self.r += 1;
        Some(out)
    }
}

/// Cursor over the first `count` terms of a family at parameter `k`.
///
/// Each caller owns its own cursor; for `k = 1` every step costs a constant
/// number of big-number operations.
pub struct SeqStream {
    inner: Box<dyn Iterator<Item = Term> + Send>,
}

impl Iterator for SeqStream {
    type Item = Term;

    fn next(&mut self) -> Option<Term> {
        self.inner.next()
    }
}

pub fn seq_stream(family: FamilyTag, count: u64, k: u64) -> Result<SeqStream> {
    if count == 0 {
        return Err(Error::BelowMinimum {
            name: "count",
            value: 0,
            min: 1,
        });
    }
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let max = if family.is_polynomial() {
        polynomials::MAX_POLY_INDEX
    } else {
        MAX_INDEX
    };
    check_index(count - 1, max)?;
    let take = count as usize;
    let inner: Box<dyn Iterator<Item = Term> + Send> = match family {
        FamilyTag::M => Box::new(
            KStream::new(mersenne_recurrence(), k)
                .take(take)
                .map(Term::from),
        ),
        FamilyTag::GM => Box::new(
            KStream::new(gaussian_recurrence(), k)
                .take(take)
                .map(Term::from),
        ),
        FamilyTag::MP => Box::new(
            KStream::new(polynomials::mersenne_poly_recurrence(), k)
                .take(take)
                .map(Term::from),
        ),
        FamilyTag::GMP => Box::new(
            KStream::new(polynomials::gaussian_mersenne_poly_recurrence(), k)
                .take(take)
                .map(Term::from),
        ),
    };
    Ok(SeqStream { inner })
}
