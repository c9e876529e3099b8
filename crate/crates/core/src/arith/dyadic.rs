use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{Coefficient, GaussianPolynomial};
use crate::error::{Error, Result};

/// Exact Gaussian dyadic rational `(re_num + im_num·i) / 2^exp2`.
///
/// Canonical form: `exp2 == 0`, or `re_num` and `im_num` are not both even.
/// Zero is always `(0, 0, 0)`. Every constructor and operation returns a
/// canonical value, so the derived `Eq` is equality of complex rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianDyadic {
    re_num: BigInt,
    im_num: BigInt,
    exp2: u64,
}

impl GaussianDyadic {
    /// Builds the canonical representative of `(re + im·i) / 2^exp2`.
    pub fn new(re_num: BigInt, im_num: BigInt, exp2: u64) -> Self {
        if re_num.is_zero() && im_num.is_zero() {
            return Self::zero();
        }
        if exp2 == 0 {
            return Self {
                re_num,
                im_num,
                exp2,
            };
        }
        let twos = re_num
            .trailing_zeros()
            .unwrap_or(u64::MAX)
            .min(im_num.trailing_zeros().unwrap_or(u64::MAX));
        let shift = twos.min(exp2);
        Self {
            re_num: re_num >> shift,
            im_num: im_num >> shift,
            exp2: exp2 - shift,
        }
    }

    /// Like [`GaussianDyadic::new`] but takes a signed exponent and rejects
    /// negative values.
    pub fn try_new(re_num: BigInt, im_num: BigInt, exp2: i64) -> Result<Self> {
        let exp2 = u64::try_from(exp2).map_err(|_| Error::NegativeExponent(exp2))?;
        Ok(Self::new(re_num, im_num, exp2))
    }

    pub fn zero() -> Self {
        Self {
            re_num: BigInt::zero(),
            im_num: BigInt::zero(),
            exp2: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_integer(BigInt::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::gaussian(0, 1)
    }

    pub fn from_integer(n: BigInt) -> Self {
        Self {
            re_num: n,
            im_num: BigInt::zero(),
            exp2: 0,
        }
    }

    /// Gaussian integer `re + im·i`.
    pub fn gaussian(re: i64, im: i64) -> Self {
        Self::new(BigInt::from(re), BigInt::from(im), 0)
    }

    /// Exact `2^e` for any signed `e`, computed by binary exponentiation of
    /// `2` or `1/2`.
    pub fn two_pow(e: i64) -> Self {
        let base = if e >= 0 {
            Self::from_integer(BigInt::from(2))
        } else {
            Self::new(BigInt::one(), BigInt::zero(), 1)
        };
        base.pow(e.unsigned_abs())
    }

    pub fn re_num(&self) -> &BigInt {
        &self.re_num
    }

    pub fn im_num(&self) -> &BigInt {
        &self.im_num
    }

    pub fn exp2(&self) -> u64 {
        self.exp2
    }

    pub fn is_zero(&self) -> bool {
        self.re_num.is_zero() && self.im_num.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im_num.is_zero()
    }

    /// True when the value is a plain integer (no `i`, no denominator).
    pub fn as_integer(&self) -> Option<&BigInt> {
        (self.exp2 == 0 && self.im_num.is_zero()).then_some(&self.re_num)
    }

    /// Real part as its own dyadic value.
    pub fn re(&self) -> Self {
        Self::new(self.re_num.clone(), BigInt::zero(), self.exp2)
    }

    /// Imaginary part (the real coefficient of `i`) as its own dyadic value.
    pub fn im(&self) -> Self {
        Self::new(self.im_num.clone(), BigInt::zero(), self.exp2)
    }

    pub fn conj(&self) -> Self {
        Self {
            re_num: self.re_num.clone(),
            im_num: -&self.im_num,
            exp2: self.exp2,
        }
    }

    /// Multiplies by `2^e` exactly.
    pub fn mul_pow2(&self, e: i64) -> Self {
        if e >= 0 {
            let e = e as u64;
            let drop = e.min(self.exp2);
            let lift = (e - drop) as usize;
            Self::new(&self.re_num << lift, &self.im_num << lift, self.exp2 - drop)
        } else {
            Self::new(
                self.re_num.clone(),
                self.im_num.clone(),
                self.exp2 + e.unsigned_abs(),
            )
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        super::pow(self, e)
    }

    /// Multiplicative inverse, when it is again a Gaussian dyadic.
    ///
    /// That is the case exactly when `re² + im²` is a power of two.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re_num * &self.re_num + &self.im_num * &self.im_num;
        let twos = norm.trailing_zeros()?;
        if (&norm >> twos) != BigInt::one() {
            return None;
        }
        let lift = self.exp2 as usize;
        Some(Self::new(
            &self.re_num << lift,
            -(&self.im_num << lift),
            twos,
        ))
    }

    /// `(re, im)` rounded to the nearest doubles.
    pub fn to_f64_parts(&self) -> (f64, f64) {
        let scale = (-(self.exp2 as f64)).exp2();
        let re = self.re_num.to_f64().unwrap_or(f64::NAN) * scale;
        let im = self.im_num.to_f64().unwrap_or(f64::NAN) * scale;
        (re, im)
    }

    fn align(&self, other: &Self) -> (BigInt, BigInt, BigInt, BigInt, u64) {
        let exp2 = self.exp2.max(other.exp2);
        let ls = (exp2 - self.exp2) as usize;
        let lo = (exp2 - other.exp2) as usize;
        (
            &self.re_num << ls,
            &self.im_num << ls,
            &other.re_num << lo,
            &other.im_num << lo,
            exp2,
        )
    }
}

impl fmt::Debug for GaussianDyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussianDyadic({})", self)
    }
}

impl fmt::Display for GaussianDyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&GaussianPolynomial::constant(self.clone()), f)
    }
}

impl From<BigInt> for GaussianDyadic {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

impl From<i64> for GaussianDyadic {
    fn from(n: i64) -> Self {
        Self::from_integer(BigInt::from(n))
    }
}

impl Add for &GaussianDyadic {
    type Output = GaussianDyadic;
    fn add(self, rhs: &GaussianDyadic) -> GaussianDyadic {
        if self.exp2 == rhs.exp2 {
            return GaussianDyadic::new(
                &self.re_num + &rhs.re_num,
                &self.im_num + &rhs.im_num,
                self.exp2,
            );
        }
        let (ar, ai, br, bi, e) = self.align(rhs);
        GaussianDyadic::new(ar + br, ai + bi, e)
    }
}

impl Sub for &GaussianDyadic {
    type Output = GaussianDyadic;
    fn sub(self, rhs: &GaussianDyadic) -> GaussianDyadic {
        if self.exp2 == rhs.exp2 {
            return GaussianDyadic::new(
                &self.re_num - &rhs.re_num,
                &self.im_num - &rhs.im_num,
                self.exp2,
            );
        }
        let (ar, ai, br, bi, e) = self.align(rhs);
        GaussianDyadic::new(ar - br, ai - bi, e)
    }
}

impl Mul for &GaussianDyadic {
    type Output = GaussianDyadic;
    fn mul(self, rhs: &GaussianDyadic) -> GaussianDyadic {
        let exp2 = self.exp2 + rhs.exp2;
        if rhs.im_num.is_zero() {
            return GaussianDyadic::new(
                &self.re_num * &rhs.re_num,
                &self.im_num * &rhs.re_num,
                exp2,
            );
        }
        if self.im_num.is_zero() {
            return GaussianDyadic::new(
                &self.re_num * &rhs.re_num,
                &self.re_num * &rhs.im_num,
                exp2,
            );
        }
        let re = &self.re_num * &rhs.re_num - &self.im_num * &rhs.im_num;
        let im = &self.re_num * &rhs.im_num + &self.im_num * &rhs.re_num;
        GaussianDyadic::new(re, im, exp2)
    }
}

impl Neg for &GaussianDyadic {
    type Output = GaussianDyadic;
    fn neg(self) -> GaussianDyadic {
        GaussianDyadic {
            re_num: -&self.re_num,
            im_num: -&self.im_num,
            exp2: self.exp2,
        }
    }
}

impl Neg for GaussianDyadic {
    type Output = GaussianDyadic;
    fn neg(self) -> GaussianDyadic {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianDyadic {
            type Output = GaussianDyadic;
            fn $m(self, rhs: GaussianDyadic) -> GaussianDyadic {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&GaussianDyadic> for GaussianDyadic {
            type Output = GaussianDyadic;
            fn $m(self, rhs: &GaussianDyadic) -> GaussianDyadic {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Zero for GaussianDyadic {
    fn zero() -> Self {
        GaussianDyadic::zero()
    }
    fn is_zero(&self) -> bool {
        GaussianDyadic::is_zero(self)
    }
}

impl One for GaussianDyadic {
    fn one() -> Self {
        GaussianDyadic::one()
    }
}

impl Coefficient for GaussianDyadic {
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
