//! Independent oracle: complex rationals over `num-rational`, sequences by
//! plain recurrence, k-values by repeated multiplication, and a parser for
//! hand-transcribed table cells.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use kmersenne::{FamilyTag, GaussianDyadic, GaussianPolynomial, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q2 {
    pub re: BigRational,
    pub im: BigRational,
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Q2 {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Q2 { re, im }
    }
    pub fn int(re: i64, im: i64) -> Self {
        Q2::new(q(re), q(im))
    }
    pub fn zero() -> Self {
        Q2::int(0, 0)
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn add(&self, o: &Q2) -> Q2 {
        Q2::new(&self.re + &o.re, &self.im + &o.im)
    }
    pub fn sub(&self, o: &Q2) -> Q2 {
        Q2::new(&self.re - &o.re, &self.im - &o.im)
    }
    pub fn mul(&self, o: &Q2) -> Q2 {
        Q2::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    pub fn div_int(&self, d: i64) -> Q2 {
        Q2::new(&self.re / q(d), &self.im / q(d))
    }
}

/// Polynomial in x over Q(i), lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly(pub Vec<Q2>);

impl QPoly {
    pub fn trim(mut v: Vec<Q2>) -> Self {
        while v.last().is_some_and(Q2::is_zero) {
            v.pop();
        }
        QPoly(v)
    }
    pub fn constant(c: Q2) -> Self {
        QPoly::trim(vec![c])
    }
    pub fn x() -> Self {
        QPoly(vec![Q2::zero(), Q2::int(1, 0)])
    }
    pub fn one() -> Self {
        QPoly::constant(Q2::int(1, 0))
    }
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        let z = Q2::zero();
        QPoly::trim(
            (0..n)
                .map(|j| self.0.get(j).unwrap_or(&z).add(o.0.get(j).unwrap_or(&z)))
                .collect(),
        )
    }
    pub fn neg(&self) -> QPoly {
        QPoly(self.0.iter().map(|c| Q2::zero().sub(c)).collect())
    }
    pub fn sub(&self, o: &QPoly) -> QPoly {
        self.add(&o.neg())
    }
    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly(vec![]);
        }
        let mut out = vec![Q2::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        QPoly::trim(out)
    }
    pub fn scale(&self, c: &Q2) -> QPoly {
        QPoly::trim(self.0.iter().map(|a| a.mul(c)).collect())
    }
    /// Repeated multiplication, deliberately not square-and-multiply.
    pub fn pow(&self, e: u64) -> QPoly {
        (0..e).fold(QPoly::one(), |acc, _| acc.mul(self))
    }
    pub fn eval(&self, x: &Q2) -> Q2 {
        self.0
            .iter()
            .rev()
            .fold(Q2::zero(), |acc, c| acc.mul(x).add(c))
    }
}

pub fn from_dyadic(g: &GaussianDyadic) -> Q2 {
    let d = BigRational::from_integer(BigInt::one() << g.exp2() as usize);
    Q2::new(
        BigRational::from_integer(g.re_num().clone()) / &d,
        BigRational::from_integer(g.im_num().clone()) / d,
    )
}

pub fn from_poly(p: &GaussianPolynomial) -> QPoly {
    QPoly::trim(p.coeffs().iter().map(from_dyadic).collect())
}

pub fn from_term(t: &Term) -> QPoly {
    from_poly(&t.to_polynomial())
}

fn seeds(family: FamilyTag) -> (QPoly, QPoly, QPoly) {
    let three = Q2::int(3, 0);
    let mult = if family.is_polynomial() {
        QPoly::x().scale(&three)
    } else {
        QPoly::constant(three)
    };
    let first = if family.is_gaussian() {
        QPoly::constant(Q2::int(0, -1).div_int(2))
    } else {
        QPoly(vec![])
    };
    (first, QPoly::one(), mult)
}

/// `T_0..=T_n` by direct iteration of `T_{j+2} = c T_{j+1} - 2 T_j`.
pub fn oracle_prefix(family: FamilyTag, n: u64) -> Vec<QPoly> {
    let (t0, t1, c) = seeds(family);
    let two = Q2::int(2, 0);
    let mut out = vec![t0, t1];
    while out.len() <= n as usize {
        let len = out.len();
        let next = c.mul(&out[len - 1]).sub(&out[len - 2].scale(&two));
        out.push(next);
    }
    out.truncate(n as usize + 1);
    out
}

pub fn oracle(family: FamilyTag, n: u64) -> QPoly {
    oracle_prefix(family, n).pop().unwrap()
}

/// `T(n; k)` from the product relation, powers by repeated multiplication.
pub fn oracle_k(family: FamilyTag, n: u64, k: u64) -> QPoly {
    let (s, r) = (n / k, n % k);
    let prefix = oracle_prefix(family, s + 1);
    prefix[s as usize]
        .pow(k - r)
        .mul(&prefix[s as usize + 1].pow(r))
}

/// Parses cells such as `-i/2`, `18+16i`, `27x^3-12x+i(9x^2-2)`,
/// `(9x^2-1)+i6x`: integers, `x`, `^`, `i`, parentheses, implicit products,
/// `+ -` and division by an integer.
pub fn parse_cell(s: &str) -> QPoly {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { s: chars, pos: 0 };
    let v = p.expr();
    assert_eq!(p.pos, p.s.len(), "trailing input in {s:?}");
    v
}

struct Parser {
    s: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> QPoly {
        let mut acc = QPoly(vec![]);
        let mut sign = 1;
        if let Some(c @ ('+' | '-')) = self.peek() {
            sign = if c == '-' { -1 } else { 1 };
            self.pos += 1;
        }
        loop {
            let t = self.term();
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return acc,
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> QPoly {
        let mut acc = self.factor();
        loop {
            match self.peek() {
                Some('/') => {
                    self.pos += 1;
                    let d = self.int();
                    acc = acc.scale(&Q2::new(
                        BigRational::new(BigInt::one(), BigInt::from(d)),
                        q(0),
                    ));
                }
                Some(c) if c.is_ascii_digit() || c == 'x' || c == 'i' || c == '(' => {
                    acc = acc.mul(&self.factor());
                }
                _ => return acc,
            }
        }
    }

    fn int(&mut self) -> i64 {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.s[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .expect("integer")
    }

    fn factor(&mut self) -> QPoly {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr();
                assert_eq!(self.peek(), Some(')'));
                self.pos += 1;
                v
            }
            Some('i') => {
                self.pos += 1;
                QPoly::constant(Q2::int(0, 1))
            }
            Some('x') => {
                self.pos += 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let e = self.int();
                    QPoly::x().pow(e as u64)
                } else {
                    QPoly::x()
                }
            }
            Some(c) if c.is_ascii_digit() => QPoly::constant(Q2::int(self.int(), 0)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
