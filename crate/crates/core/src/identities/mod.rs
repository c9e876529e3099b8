//! Identity checkers.
//!
//! Every checker evaluates its left-hand side from the sequence and
//! polynomial modules and its right-hand side from the closed form, then
//! compares the two exactly. Both sides are carried as
//! [`GaussianPolynomial`]s so one report shape serves all four families.
//!
//! Orientation differs per family: the integer Cassini identity
//! is `Mₙ² - Mₙ₊₁Mₙ₋₁` while the Gaussian one is `GMₙ₊₁GMₙ₋₁ - GMₙ²`.

mod series;
pub mod suites;

pub use series::{expand_rational_series, genfunc_denominator, genfunc_numerator, RationalSeries};

use crate::arith::{GaussianDyadic, GaussianPolynomial};
use crate::error::{Error, Result};
use crate::polynomials;
use crate::sequences::{self, FamilyTag};

/// Both sides of one identity instance and the exact verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: &'static str,
    pub family: Option<FamilyTag>,
    /// The left-hand side as evaluated, in the identity's usual orientation.
    pub orientation: &'static str,
    pub parameters: Vec<(&'static str, u64)>,
    pub lhs: GaussianPolynomial,
    pub rhs: GaussianPolynomial,
    pub holds: bool,
}

impl IdentityReport {
    fn new(
        identity: &'static str,
        family: Option<FamilyTag>,
        orientation: &'static str,
        parameters: Vec<(&'static str, u64)>,
        lhs: GaussianPolynomial,
        rhs: GaussianPolynomial,
    ) -> Self {
        let holds = lhs == rhs;
        Self {
            identity,
            family,
            orientation,
            parameters,
            lhs,
            rhs,
            holds,
        }
    }

    /// `lhs - rhs`; zero exactly when the identity holds.
    pub fn residual(&self) -> GaussianPolynomial {
        &self.lhs - &self.rhs
    }

    pub fn parameter(&self, name: &str) -> Option<u64> {
        self.parameters
            .iter()
            .find(|(p, _)| *p == name)
            .map(|&(_, v)| v)
    }
}

fn require_min(name: &'static str, value: u64, min: u64) -> Result<()> {
    if value < min {
        Err(Error::BelowMinimum { name, value, min })
    } else {
        Ok(())
    }
}

fn term(family: FamilyTag, n: u64, k: u64) -> Result<GaussianPolynomial> {
    Ok(family.term(n, k)?.to_polynomial())
}

fn base(family: FamilyTag, n: u64) -> Result<GaussianPolynomial> {
    term(family, n, 1)
}

fn constant(c: GaussianDyadic) -> GaussianPolynomial {
    GaussianPolynomial::constant(c)
}

fn two_pow(e: i64) -> GaussianPolynomial {
    constant(GaussianDyadic::two_pow(e))
}

fn i_times(p: &GaussianPolynomial) -> GaussianPolynomial {
    p * &constant(GaussianDyadic::i())
}

/// `3` for the number families, `3x` for the polynomial ones.
fn recurrence_multiplier(family: FamilyTag) -> GaussianPolynomial {
    let three = GaussianDyadic::from(3);
    if family.is_polynomial() {
        GaussianPolynomial::monomial(three, 1)
    } else {
        constant(three)
    }
}

/// `c` for number families, `c·x` for polynomial ones.
fn maybe_x(family: FamilyTag, c: GaussianDyadic) -> GaussianPolynomial {
    if family.is_polynomial() {
        GaussianPolynomial::monomial(c, 1)
    } else {
        constant(c)
    }
}

/// `(2^{e} - 2^{e-1}) + i·(x)·3·2^{e-1}`, the shape shared by the Gaussian
/// Cassini family of right-hand sides (`x` only for polynomials).
fn gaussian_cassini_shape(family: FamilyTag, e: i64) -> GaussianPolynomial {
    let re = &GaussianDyadic::two_pow(e) - &GaussianDyadic::two_pow(e - 1);
    let im = GaussianDyadic::from(3) * GaussianDyadic::two_pow(e - 1);
    constant(re) + i_times(&maybe_x(family, im))
}

/// Closed-form right-hand sides, exposed so callers can test alternative
/// left-hand sides against them.
pub mod closed_form {
    use super::*;

    /// Cassini right-hand side in the orientation of [`check_cassini`].
    ///
    /// `2ⁿ⁻¹` for `M`/`MP`; `(2ⁿ⁻² - 2ⁿ⁻¹) - i·(x)·3·2ⁿ⁻²` for `GM`/`GMP`.
    pub fn cassini(family: FamilyTag, n: u64) -> GaussianPolynomial {
        let n = n as i64;
        match family {
            FamilyTag::M | FamilyTag::MP => two_pow(n - 1),
            FamilyTag::GM | FamilyTag::GMP => {
                let re = &GaussianDyadic::two_pow(n - 2) - &GaussianDyadic::two_pow(n - 1);
                let im = GaussianDyadic::from(3) * GaussianDyadic::two_pow(n - 2);
                constant(re) - i_times(&maybe_x(family, im))
            }
        }
    }

    /// `[(2ⁿ - 2ⁿ⁺ᵐ⁻¹) + (2ⁿ⁻ᵐ⁻¹ - 2ⁿ⁻ᵐ)] + 3i(2ⁿ - 2ⁿ⁺ᵐ⁻¹ - 2ⁿ⁻ᵐ⁻¹)`.
    pub fn catalan(n: u64, m: u64) -> GaussianDyadic {
        let (n, m) = (n as i64, m as i64);
        let p = GaussianDyadic::two_pow;
        let re = (&p(n) - &p(n + m - 1)) + (&p(n - m - 1) - &p(n - m));
        let im = GaussianDyadic::from(3) * (&(&p(n) - &p(n + m - 1)) - &p(n - m - 1));
        re + im * GaussianDyadic::i()
    }

    /// `(2ⁿ⁻¹ - 2ᵐ⁻¹) + 3i(2ⁿ⁻¹ - 2ᵐ⁻¹)`.
    pub fn docagne(n: u64, m: u64) -> GaussianDyadic {
        let d = &GaussianDyadic::two_pow(n as i64 - 1) - &GaussianDyadic::two_pow(m as i64 - 1);
        &d + &(d.clone() * GaussianDyadic::gaussian(0, 3))
    }

    /// Generalized Cassini right-hand side: zero unless `a = 1`.
    ///
    /// At `a = 1`: `-2ⁿ⁻¹·Tₙ^{2k-2}` for `M`/`MP` and
    /// `Tₙ^{2k-2}·[(2ⁿ⁻¹ - 2ⁿ⁻²) + i·(x)·3·2ⁿ⁻²]` for `GM`/`GMP`.
    pub fn k_cassini(family: FamilyTag, n: u64, k: u64, a: u64) -> Result<GaussianPolynomial> {
        if a != 1 {
            return Ok(GaussianPolynomial::zero());
        }
        let power = base(family, n)?.pow(2 * k - 2);
        Ok(match family {
            FamilyTag::M | FamilyTag::MP => -(two_pow(n as i64 - 1) * power),
            FamilyTag::GM | FamilyTag::GMP => power * gaussian_cassini_shape(family, n as i64 - 1),
        })
    }

    /// Two-index right-hand side with `N = n + m - 1`:
    /// `2ᴺ⁻¹` for `M`/`MP` and `(2ᴺ⁻¹ - 2ᴺ⁻²) + i·(x)·3·2ᴺ⁻²` for
    /// `GM`/`GMP`, i.e. the negated Gaussian Cassini value at `N`.
    pub fn two_index(family: FamilyTag, n: u64, m: u64) -> GaussianPolynomial {
        let e = (n + m) as i64 - 2;
        match family {
            FamilyTag::M | FamilyTag::MP => two_pow(e),
            FamilyTag::GM | FamilyTag::GMP => gaussian_cassini_shape(family, e),
        }
    }

    /// The Gaussian two-index value as typeset in the source tables,
    /// `(2ⁿ⁺ᵐ⁻¹ - 2ⁿ⁺ᵐ⁻²) + i·(x)·3·2ⁿ⁺ᵐ⁻²`. It is exactly twice the true
    /// value and is kept only to document that discrepancy.
    pub fn two_index_as_printed(family: FamilyTag, n: u64, m: u64) -> GaussianPolynomial {
        match family {
            FamilyTag::M | FamilyTag::MP => two_pow((n + m) as i64 - 2),
            FamilyTag::GM | FamilyTag::GMP => gaussian_cassini_shape(family, (n + m) as i64 - 1),
        }
    }
}

/// Cassini identity for any family at `n >= 1`.
pub fn check_cassini(family: FamilyTag, n: u64) -> Result<IdentityReport> {
    require_min("n", n, 1)?;
    let (prev, cur, next) = (base(family, n - 1)?, base(family, n)?, base(family, n + 1)?);
    let (lhs, orientation) = if family.is_gaussian() {
        (&next * &prev - &cur * &cur, "T(n+1)T(n-1) - T(n)^2")
    } else {
        (&cur * &cur - &next * &prev, "T(n)^2 - T(n+1)T(n-1)")
    };
    Ok(IdentityReport::new(
        "cassini",
        Some(family),
        orientation,
        vec![("n", n)],
        lhs,
        closed_form::cassini(family, n),
    ))
}

/// Catalan identity for Gaussian Mersenne numbers, `1 <= m <= n`.
pub fn check_catalan_gaussian(n: u64, m: u64) -> Result<IdentityReport> {
    require_min("m", m, 1)?;
    if m > n {
        return Err(Error::CatalanOrder { n, m });
    }
    let gm = sequences::gaussian_mersenne;
    let lhs = gm(n + m)? * gm(n - m)? - gm(n)?.pow(2);
    Ok(IdentityReport::new(
        "catalan",
        Some(FamilyTag::GM),
        "GM(n+m)GM(n-m) - GM(n)^2",
        vec![("n", n), ("m", m)],
        constant(lhs),
        constant(closed_form::catalan(n, m)),
    ))
}

/// d'Ocagne identity for Gaussian Mersenne numbers, `n, m >= 1`.
pub fn check_docagne_gaussian(n: u64, m: u64) -> Result<IdentityReport> {
    require_min("n", n, 1)?;
    require_min("m", m, 1)?;
    let gm = sequences::gaussian_mersenne;
    let lhs = gm(m + 1)? * gm(n)? - gm(m)? * gm(n + 1)?;
    Ok(IdentityReport::new(
        "docagne",
        Some(FamilyTag::GM),
        "GM(m+1)GM(n) - GM(m)GM(n+1)",
        vec![("n", n), ("m", m)],
        constant(lhs),
        constant(closed_form::docagne(n, m)),
    ))
}

/// Generalized Cassini identity on the k-family at indices
/// `nk+a, nk+a-1, nk+a-2`, for `n, k >= 2` and `0 <= a <= k`.
pub fn check_k_cassini(family: FamilyTag, n: u64, k: u64, a: u64) -> Result<IdentityReport> {
    require_min("n", n, 2)?;
    require_min("k", k, 2)?;
    if a > k {
        return Err(Error::OffsetOutOfRange { a, k });
    }
    let top = n * k + a;
    let hi = term(family, top, k)?;
    let mid = term(family, top - 1, k)?;
    let lo = term(family, top - 2, k)?;
    let (lhs, orientation) = if family.is_gaussian() {
        (&mid * &mid - &hi * &lo, "T(nk+a-1)^2 - T(nk+a)T(nk+a-2)")
    } else {
        (&hi * &lo - &mid * &mid, "T(nk+a)T(nk+a-2) - T(nk+a-1)^2")
    };
    Ok(IdentityReport::new(
        "k-cassini",
        Some(family),
        orientation,
        vec![("n", n), ("k", k), ("a", a)],
        lhs,
        closed_form::k_cassini(family, n, k, a)?,
    ))
}

/// Shift identity `T⁽ˢ⁾_{sn+1} = c·T⁽ˢ⁾_{sn} - 2·T⁽ˢ⁾_{sn-1}` with `c = 3`
/// or `3x`.
pub fn check_shift(family: FamilyTag, n: u64, s: u64) -> Result<IdentityReport> {
    require_min("n", n, 1)?;
    require_min("s", s, 1)?;
    let idx = s * n;
    let lhs = term(family, idx + 1, s)?;
    let rhs = recurrence_multiplier(family) * term(family, idx, s)?
        - two_pow(1) * term(family, idx - 1, s)?;
    Ok(IdentityReport::new(
        "shift",
        Some(family),
        "T(sn+1; s)",
        vec![("n", n), ("s", s)],
        lhs,
        rhs,
    ))
}

/// Difference identity `T_{s+1}^k - T_s^k = T⁽ᵏ⁾_{sk+k} - T⁽ᵏ⁾_{sk}`.
pub fn check_difference(family: FamilyTag, s: u64, k: u64) -> Result<IdentityReport> {
    require_min("k", k, 1)?;
    let lhs = base(family, s + 1)?.pow(k) - base(family, s)?.pow(k);
    let rhs = term(family, s * k + k, k)? - term(family, s * k, k)?;
    Ok(IdentityReport::new(
        "difference",
        Some(family),
        "T(s+1)^k - T(s)^k",
        vec![("s", s), ("k", k)],
        lhs,
        rhs,
    ))
}

/// Two-index identity on `T⁽²⁾_{2(n+m-1)} - T_{n+m}T_{n+m-2}`, `n + m > 1`.
pub fn check_two_index(family: FamilyTag, n: u64, m: u64) -> Result<IdentityReport> {
    if n + m <= 1 {
        return Err(Error::TwoIndexRange { n, m });
    }
    let sum = n + m;
    let lhs = term(family, 2 * (sum - 1), 2)? - base(family, sum)? * base(family, sum - 2)?;
    Ok(IdentityReport::new(
        "two-index",
        Some(family),
        "T(2(n+m-1); 2) - T(n+m)T(n+m-2)",
        vec![("n", n), ("m", m)],
        lhs,
        closed_form::two_index(family, n, m),
    ))
}

/// Expands the family's generating function and compares the first `count`
/// coefficients with the sequence, both packed as polynomials in `z`.
pub fn check_genfunc(family: FamilyTag, count: u64) -> Result<IdentityReport> {
    require_min("count", count, 1)?;
    let numerator = genfunc_numerator(family)?;
    let series = expand_rational_series(&numerator, &genfunc_denominator(), count as usize)?;
    let expected: Vec<GaussianDyadic> = sequences::seq_stream(family, count, 1)?
        .map(|t| t.to_polynomial().coeff(0))
        .collect();
    Ok(IdentityReport::new(
        "genfunc",
        Some(family),
        "series coefficients of num/den",
        vec![("count", count)],
        GaussianPolynomial::from_coeffs(series.coefficients),
        GaussianPolynomial::from_coeffs(expected),
    ))
}

/// `GMₙ₊₂ = Mₙ₊₂ + i·Mₙ₊₁` (numbers, family `GM`) or the polynomial analogue
/// (family `GMP`).
pub fn check_gaussian_split(family: FamilyTag, n: u64) -> Result<IdentityReport> {
    let real_family = match family {
        FamilyTag::GM => FamilyTag::M,
        FamilyTag::GMP => FamilyTag::MP,
        other => {
            return Err(Error::UnsupportedFamily {
                family: other,
                operation: "gaussian split",
            })
        }
    };
    let lhs = base(family, n + 2)?;
    let rhs = base(real_family, n + 2)? + i_times(&base(real_family, n + 1)?);
    Ok(IdentityReport::new(
        "gaussian-split",
        Some(family),
        "T(n+2)",
        vec![("n", n)],
        lhs,
        rhs,
    ))
}

/// `Mₙ(1) = Mₙ` (family `MP`) or `GMₙ(1) = GMₙ` (family `GMP`).
pub fn check_unit_evaluation(family: FamilyTag, n: u64) -> Result<IdentityReport> {
    let rhs = match family {
        FamilyTag::MP => GaussianDyadic::from_integer(sequences::mersenne(n)?),
        FamilyTag::GMP => sequences::gaussian_mersenne(n)?,
        other => {
            return Err(Error::UnsupportedFamily {
                family: other,
                operation: "unit evaluation",
            })
        }
    };
    let lhs = base(family, n)?.eval(&GaussianDyadic::one());
    Ok(IdentityReport::new(
        "unit-evaluation",
        Some(family),
        "T(n)(1)",
        vec![("n", n)],
        constant(lhs),
        constant(rhs),
    ))
}

/// Closed form against the recurrence oracle (families `M` and `GM`).
pub fn check_closed_form(family: FamilyTag, n: u64) -> Result<IdentityReport> {
    let (lhs, rhs) = match family {
        FamilyTag::M => (
            GaussianDyadic::from_integer(sequences::mersenne(n)?),
            GaussianDyadic::from_integer(sequences::mersenne_oracle(n)?),
        ),
        FamilyTag::GM => (
            sequences::gaussian_mersenne(n)?,
            sequences::gaussian_mersenne_oracle(n)?,
        ),
        other => {
            return Err(Error::UnsupportedFamily {
                family: other,
                operation: "closed form",
            })
        }
    };
    Ok(IdentityReport::new(
        "closed-form",
        Some(family),
        "closed form T(n)",
        vec![("n", n)],
        constant(lhs),
        constant(rhs),
    ))
}

/// `T⁽ᵏ⁾_{sk} = T_s^k`.
pub fn check_power_relation(family: FamilyTag, s: u64, k: u64) -> Result<IdentityReport> {
    require_min("k", k, 1)?;
    Ok(IdentityReport::new(
        "power-relation",
        Some(family),
        "T(sk; k)",
        vec![("s", s), ("k", k)],
        term(family, s * k, k)?,
        base(family, s)?.pow(k),
    ))
}

/// The seven `k = 2, 3` relations at `n`:
///
/// 1. `T⁽²⁾_{2n} = Tₙ²`
/// 2. `T⁽²⁾_{2n+1} = TₙTₙ₊₁`
/// 3. `T⁽²⁾_{2n+1} = c·T⁽²⁾_{2n} - 2T⁽²⁾_{2n-1}` (`n >= 1`)
/// 4. `T⁽³⁾_{3n} = Tₙ³`
/// 5. `T⁽³⁾_{3n+1} = Tₙ²Tₙ₊₁`
/// 6. `T⁽³⁾_{3n+1} = c·T⁽³⁾_{3n} - 2T⁽³⁾_{3n-1}` (`n >= 1`)
/// 7. `T⁽³⁾_{3n+2} = TₙTₙ₊₁²`
pub fn check_small_k_relations(family: FamilyTag, n: u64) -> Result<Vec<IdentityReport>> {
    let (t0, t1) = (base(family, n)?, base(family, n + 1)?);
    let k2 = |i| term(family, i, 2);
    let k3 = |i| term(family, i, 3);
    let report = |orientation, lhs, rhs| {
        IdentityReport::new(
            "k-relations",
            Some(family),
            orientation,
            vec![("n", n)],
            lhs,
            rhs,
        )
    };
    let mut out = vec![
        report("T(2n; 2) = T(n)^2", k2(2 * n)?, t0.pow(2)),
        report("T(2n+1; 2) = T(n)T(n+1)", k2(2 * n + 1)?, &t0 * &t1),
        report("T(3n; 3) = T(n)^3", k3(3 * n)?, t0.pow(3)),
        report(
            "T(3n+1; 3) = T(n)^2 T(n+1)",
            k3(3 * n + 1)?,
            t0.pow(2) * &t1,
        ),
        report(
            "T(3n+2; 3) = T(n)T(n+1)^2",
            k3(3 * n + 2)?,
            &t0 * &t1.pow(2),
        ),
    ];
    if n >= 1 {
        out.push(check_shift(family, n, 2)?);
        out.push(check_shift(family, n, 3)?);
    }
    Ok(out)
}

/// Wraps the Binet comparison so it can be reported next to exact checks.
pub fn check_binet(n: u64, x0: &GaussianDyadic, tol: f64) -> Result<polynomials::BinetCheck> {
    polynomials::binet_numeric_check(n, x0, tol)
}
