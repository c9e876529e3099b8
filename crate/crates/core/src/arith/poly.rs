use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Coefficient, GaussianDyadic};

/// Degree of a polynomial; the zero polynomial has degree `-∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

/// Dense polynomial in `x`; `coeffs[j]` multiplies `x^j`.
///
/// Canonical form: the last stored coefficient is nonzero, so the zero
/// polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

pub type IntPolynomial = Poly<BigInt>;
pub type GaussianPolynomial = Poly<GaussianDyadic>;

impl<C: Coefficient> Poly<C> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·x^power`.
    pub fn monomial(c: C, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); power + 1];
        coeffs[power] = c;
        Self { coeffs }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(C::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `x^j`, zero beyond the degree.
    pub fn coeff(&self, j: usize) -> C {
        self.coeffs.get(j).cloned().unwrap_or_else(C::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            len => Degree::Finite(len - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiplies by `x^by`.
    pub fn shift(&self, by: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u64) -> Self {
        super::pow(self, e)
    }

    /// Horner evaluation at `x0`.
    pub fn eval(&self, x0: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.mul_ref(x0).add_ref(c))
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = C::zero();
        let coeffs = (0..len)
            .map(|j| {
                let a = self.coeffs.get(j).unwrap_or(&zero);
                let b = rhs.coeffs.get(j).unwrap_or(&zero);
                f(a, b)
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    fn schoolbook_mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self::from_coeffs(out)
    }
}

impl IntPolynomial {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Embeds into the Gaussian polynomial ring.
    pub fn to_gaussian(&self) -> GaussianPolynomial {
        self.map(|c| GaussianDyadic::from_integer(c.clone()))
    }
}

impl GaussianPolynomial {
    /// `re + i·im` for integer polynomials `re`, `im`.
    pub fn from_parts(re: &IntPolynomial, im: &IntPolynomial) -> Self {
        let len = re.coeffs().len().max(im.coeffs().len());
        Self::from_coeffs(
            (0..len)
                .map(|j| GaussianDyadic::new(re.coeff(j), im.coeff(j), 0))
                .collect(),
        )
    }

    /// Coefficient-wise real part.
    pub fn re_part(&self) -> Self {
        self.map(GaussianDyadic::re)
    }

    /// Coefficient-wise imaginary part.
    pub fn im_part(&self) -> Self {
        self.map(GaussianDyadic::im)
    }

    /// Integer polynomial view, if every coefficient is an integer.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.as_integer().cloned())
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::from_coeffs)
    }
}

impl<C: Coefficient> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

impl<C: Coefficient> One for Poly<C> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<C: Coefficient> Coefficient for Poly<C> {
    fn add_ref(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, C::add_ref)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, C::sub_ref)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.schoolbook_mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(C::neg_ref).collect(),
        }
    }
}

macro_rules! poly_ops {
    ($($tr:ident $m:ident $via:ident),*) => {$(
        impl<C: Coefficient> $tr for &Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: &Poly<C>) -> Poly<C> {
                Coefficient::$via(self, rhs)
            }
        }
        impl<C: Coefficient> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                Coefficient::$via(&self, &rhs)
            }
        }
        impl<C: Coefficient> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: &Poly<C>) -> Poly<C> {
                Coefficient::$via(&self, rhs)
            }
        }
    )*};
}

poly_ops!(Add add add_ref, Sub sub sub_ref, Mul mul mul_ref);

impl<C: Coefficient> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_ref()
    }
}

impl<C: Coefficient> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_ref()
    }
}

// ---------------------------------------------------------------------------
// Rendering: descending degree, explicit signs, `x^j` powers. Gaussian
// polynomials are written as `re+i(im)` over a common `2^e` denominator,
// e.g. `3x+i`, `27x^3-9x+i(18x^2-2)`, `-i/2`, `(-1-i3x)/2`.
// ---------------------------------------------------------------------------

fn push_term(out: &mut String, c: &BigInt, power: usize) {
    let first = out.is_empty();
    if c.is_negative() {
        out.push('-');
    } else if !first {
        out.push('+');
    }
    let mag = c.abs();
    if power == 0 || !mag.is_one() {
        out.push_str(&mag.to_string());
    }
    match power {
        0 => {}
        1 => out.push('x'),
        p => {
            out.push_str("x^");
            out.push_str(&p.to_string());
        }
    }
}

/// Renders integer coefficients; returns the text and the number of terms.
fn render_int_terms(coeffs: &[BigInt]) -> (String, usize) {
    let mut out = String::new();
    let mut terms = 0;
    for (power, c) in coeffs.iter().enumerate().rev() {
        if !c.is_zero() {
            push_term(&mut out, c, power);
            terms += 1;
        }
    }
    (out, terms)
}

fn render_imaginary(coeffs: &[BigInt]) -> Option<String> {
    let (body, terms) = render_int_terms(coeffs);
    match terms {
        0 => None,
        1 => {
            let (power, c) = coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())?;
            if power == 0 {
                // constant: 3i, -i
                Some(match c {
                    c if c.is_one() => "i".to_string(),
                    c if (-c).is_one() => "-i".to_string(),
                    c => format!("{c}i"),
                })
            } else if let Some(rest) = body.strip_prefix('-') {
                Some(format!("-i{rest}"))
            } else {
                Some(format!("i{body}"))
            }
        }
        _ => Some(format!("i({body})")),
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str(&render_int_terms(&self.coeffs).0)
    }
}

impl fmt::Display for GaussianPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let exp2 = self
            .coeffs
            .iter()
            .map(GaussianDyadic::exp2)
            .max()
            .unwrap_or(0);
        let lift = |c: &GaussianDyadic, part: &BigInt| part << (exp2 - c.exp2()) as usize;
        let re: Vec<BigInt> = self.coeffs.iter().map(|c| lift(c, c.re_num())).collect();
        let im: Vec<BigInt> = self.coeffs.iter().map(|c| lift(c, c.im_num())).collect();

        let (re_text, re_terms) = render_int_terms(&re);
        let im_text = render_imaginary(&im);
        let terms = re_terms + usize::from(im_text.is_some());
        let body = match im_text {
            None => re_text,
            Some(im_text) if re_text.is_empty() => im_text,
            Some(im_text) if im_text.starts_with('-') => format!("{re_text}{im_text}"),
            Some(im_text) => format!("{re_text}+{im_text}"),
        };
        if exp2 == 0 {
            f.write_str(&body)
        } else {
            let denom = BigInt::one() << exp2 as usize;
            if terms == 1 {
                write!(f, "{body}/{denom}")
            } else {
                write!(f, "({body})/{denom}")
            }
        }
    }
}

impl<C: Coefficient> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Poly")?;
        f.debug_list().entries(&self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn gp(re: &[i64], im: &[i64]) -> GaussianPolynomial {
        GaussianPolynomial::from_parts(&ip(re), &ip(im))
    }

    #[test]
    fn canonical_zero_is_empty() {
        let z = ip(&[0, 0, 0]);
        assert!(z.coeffs().is_empty());
        assert_eq!(z.degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(ip(&[1, 2, 0]).degree(), Degree::Finite(1));
    }

    #[test]
    fn mersenne_polynomial_step() {
        let three_x = ip(&[0, 3]);
        let m3 = &three_x * &three_x - ip(&[2]);
        assert_eq!(m3, ip(&[-2, 0, 9]));
        assert_eq!(m3.to_string(), "9x^2-2");
    }

    #[test]
    fn multiplication_by_zero_absorbs() {
        assert!((ip(&[1, 2, 3]) * IntPolynomial::zero()).is_zero());
        assert!((gp(&[1], &[2]) * GaussianPolynomial::zero()).is_zero());
    }

    #[test]
    fn gaussian_product_of_gm2_and_gm3() {
        // (3x + i)(9x^2 - 2 + 3xi) = 27x^3 - 9x + i(18x^2 - 2)
        let p = gp(&[0, 3], &[1]) * gp(&[-2, 0, 9], &[0, 3]);
        assert_eq!(p, gp(&[0, -9, 0, 27], &[-2, 0, 18]));
        assert_eq!(p.to_string(), "27x^3-9x+i(18x^2-2)");
    }

    #[test]
    fn powers() {
        assert_eq!(ip(&[0, 3]).pow(2), ip(&[0, 0, 9]));
        assert_eq!(ip(&[0, 3]).pow(3), ip(&[0, 0, 0, 27]));
        let p = ip(&[4, -1, 7]);
        assert_eq!(p.pow(1), p);
        assert_eq!(p.pow(0), IntPolynomial::one());
        assert_eq!(IntPolynomial::zero().pow(0), IntPolynomial::one());
    }

    #[test]
    fn evaluation() {
        assert_eq!(ip(&[-2, 0, 9]).eval(&BigInt::from(1)), BigInt::from(7));
        assert!(GaussianPolynomial::zero()
            .eval(&GaussianDyadic::gaussian(5, 5))
            .is_zero());
        assert_eq!(
            gp(&[0, 3], &[1]).eval(&GaussianDyadic::one()),
            GaussianDyadic::gaussian(3, 1)
        );
    }

    #[test]
    fn shift_and_scale() {
        assert_eq!(ip(&[1, 2]).shift(2), ip(&[0, 0, 1, 2]));
        assert!(IntPolynomial::zero().shift(3).is_zero());
        assert_eq!(ip(&[1, 2]).scale(&BigInt::from(-3)), ip(&[-3, -6]));
        assert!(ip(&[1, 2]).scale(&BigInt::from(0)).is_zero());
    }

    #[test]
    fn rendering_matches_table_notation() {
        assert_eq!(ip(&[4, 0, -54, 0, 81]).to_string(), "81x^4-54x^2+4");
        assert_eq!(ip(&[0, -12, 0, 27]).to_string(), "27x^3-12x");
        assert_eq!(ip(&[0, 1]).to_string(), "x");
        assert_eq!(ip(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPolynomial::zero().to_string(), "0");

        assert_eq!(gp(&[0, 3], &[1]).to_string(), "3x+i");
        assert_eq!(gp(&[-1, 0, 9], &[0, 6]).to_string(), "9x^2-1+i6x");
        assert_eq!(gp(&[7], &[3]).to_string(), "7+3i");
        assert_eq!(gp(&[7], &[-3]).to_string(), "7-3i");
        assert_eq!(gp(&[0], &[-1]).to_string(), "-i");

        let half = |re: i64, im: i64, e: u64| {
            GaussianPolynomial::constant(GaussianDyadic::new(re.into(), im.into(), e))
        };
        assert_eq!(half(0, -1, 1).to_string(), "-i/2");
        assert_eq!(half(-1, 0, 2).to_string(), "-1/4");
        assert_eq!(half(0, 1, 3).to_string(), "i/8");
        assert_eq!(half(-1, -3, 1).to_string(), "(-1-3i)/2");

        // -1/2 - i(3x/2)
        let cassini_base = GaussianPolynomial::from_coeffs(vec![
            GaussianDyadic::new((-1).into(), 0.into(), 1),
            GaussianDyadic::new(0.into(), (-3).into(), 1),
        ]);
        assert_eq!(cassini_base.to_string(), "(-1-i3x)/2");
    }

    #[test]
    fn parts_roundtrip() {
        let p = gp(&[1, 2, 3], &[0, -5]);
        let back = p.re_part() + p.im_part() * GaussianPolynomial::constant(GaussianDyadic::i());
        assert_eq!(back, p);
        assert_eq!(p.re_part().to_integer(), Some(ip(&[1, 2, 3])));
    }
}
