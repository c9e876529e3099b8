//! Mersenne polynomials `Mₙ(x)` and Gaussian Mersenne polynomials `GMₙ(x)`,
//! their k-generalizations, and a floating-point check of the Binet forms.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{GaussianDyadic, GaussianPolynomial, IntPolynomial};
use crate::error::{Error, Result};
use crate::sequences::{check_index, decompose, gaussian_seed, Decomposition, Recurrence};

/// Largest index accepted by the polynomial families. Coefficients grow
/// like `3ⁿ`, so this keeps every value within a few megabytes.
pub const MAX_POLY_INDEX: u64 = 1024;

pub(crate) fn mersenne_poly_recurrence() -> Recurrence<IntPolynomial> {
    Recurrence::new(
        IntPolynomial::zero(),
        IntPolynomial::one(),
        IntPolynomial::monomial(BigInt::from(3), 1),
    )
}

pub(crate) fn gaussian_mersenne_poly_recurrence() -> Recurrence<GaussianPolynomial> {
    Recurrence::new(
        GaussianPolynomial::constant(gaussian_seed()),
        GaussianPolynomial::one(),
        GaussianPolynomial::monomial(GaussianDyadic::from(3), 1),
    )
}

/// `Mₙ(x)` from `M_{j+2}(x) = 3x·M_{j+1}(x) - 2M_j(x)`, `M₀ = 0`, `M₁ = 1`.
pub fn mersenne_poly(n: u64) -> Result<IntPolynomial> {
    check_index(n, MAX_POLY_INDEX)?;
    Ok(mersenne_poly_recurrence().pair_at(n).0)
}

/// `Mₙ⁽ᵏ⁾(x) = M_s(x)^{k-r} · M_{s+1}(x)^r` where `n = s·k + r`.
pub fn k_mersenne_poly(n: u64, k: u64) -> Result<IntPolynomial> {
    check_index(n, MAX_POLY_INDEX)?;
    let Decomposition { s, r } = decompose(n, k)?;
    let (lo, hi) = mersenne_poly_recurrence().pair_at(s);
    Ok(lo.pow(k - r) * hi.pow(r))
}

/// `GMₙ(x)` from the same recurrence with seeds `GM₀ = -i/2`, `GM₁ = 1`.
pub fn gaussian_mersenne_poly(n: u64) -> Result<GaussianPolynomial> {
    check_index(n, MAX_POLY_INDEX)?;
    Ok(gaussian_mersenne_poly_recurrence().pair_at(n).0)
}

/// `GMₙ⁽ᵏ⁾(x) = GM_s(x)^{k-r} · GM_{s+1}(x)^r` where `n = s·k + r`.
pub fn k_gaussian_mersenne_poly(n: u64, k: u64) -> Result<GaussianPolynomial> {
    check_index(n, MAX_POLY_INDEX)?;
    let Decomposition { s, r } = decompose(n, k)?;
    let (lo, hi) = gaussian_mersenne_poly_recurrence().pair_at(s);
    Ok(lo.pow(k - r) * hi.pow(r))
}

/// Real roots of `λ² - 3x₀λ + 2 = 0`, `lambda1 >= lambda2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticRoots {
    pub lambda1: f64,
    pub lambda2: f64,
}

impl QuadraticRoots {
    pub fn at(x0: f64) -> Result<Self> {
        let disc = 9.0 * x0 * x0 - 8.0;
        if disc.is_nan() || disc <= 0.0 {
            return Err(Error::DegenerateDiscriminant);
        }
        let root = disc.sqrt();
        Ok(Self {
            lambda1: (3.0 * x0 + root) / 2.0,
            lambda2: (3.0 * x0 - root) / 2.0,
        })
    }

    /// `(λ₁ⁿ - λ₂ⁿ) / (λ₁ - λ₂)` for any signed `n`.
    pub fn lucas(&self, n: i64) -> f64 {
        let n = n as i32;
        (self.lambda1.powi(n) - self.lambda2.powi(n)) / (self.lambda1 - self.lambda2)
    }
}

/// Outcome of comparing the Binet forms with the exact polynomials at `x0`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinetCheck {
    pub n: u64,
    pub x0: f64,
    pub mersenne_exact: f64,
    pub mersenne_binet: f64,
    pub mersenne_rel_error: f64,
    pub gaussian_exact: (f64, f64),
    pub gaussian_binet: (f64, f64),
    pub gaussian_rel_error: f64,
    pub passed: bool,
}

fn relative_error(exact: (f64, f64), approx: (f64, f64)) -> f64 {
    let diff = (exact.0 - approx.0).hypot(exact.1 - approx.1);
    let scale = exact.0.hypot(exact.1);
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

/// Evaluates `Mₙ(x₀)` and `GMₙ(x₀)` through their Binet forms in double
/// precision and compares them with the exact polynomials.
///
/// `x0` must be real with `9x₀² - 8 > 0`, so the two roots are real and
/// distinct.
pub fn binet_numeric_check(n: u64, x0: &GaussianDyadic, tol: f64) -> Result<BinetCheck> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance);
    }
    if !x0.is_real() {
        return Err(Error::NonRealSample);
    }
    // 9p² - 8·4^e > 0 for x0 = p / 2^e, decided exactly
    let p = x0.re_num();
    let disc_num = BigInt::from(9) * p * p - (BigInt::from(8) << (2 * x0.exp2()) as usize);
    if disc_num <= BigInt::zero() {
        return Err(Error::DegenerateDiscriminant);
    }

    let exact_m = mersenne_poly(n)?.to_gaussian().eval(x0).to_f64_parts();
    let exact_gm = gaussian_mersenne_poly(n)?.eval(x0).to_f64_parts();

    let x = x0.to_f64_parts().0;
    let roots = QuadraticRoots::at(x)?;
    let binet_m = roots.lucas(n as i64);
    let binet_gm = (roots.lucas(n as i64), roots.lucas(n as i64 - 1));

    let mersenne_rel_error = relative_error(exact_m, (binet_m, 0.0));
    let gaussian_rel_error = relative_error(exact_gm, binet_gm);
    Ok(BinetCheck {
        n,
        x0: x,
        mersenne_exact: exact_m.0,
        mersenne_binet: binet_m,
        mersenne_rel_error,
        gaussian_exact: exact_gm,
        gaussian_binet: binet_gm,
        gaussian_rel_error,
        passed: mersenne_rel_error < tol && gaussian_rel_error < tol,
    })
}

/// `1`, `3/2`, `2`, `3`: real, distinct-root sample points.
pub fn default_binet_samples() -> Vec<GaussianDyadic> {
    vec![
        GaussianDyadic::one(),
        GaussianDyadic::new(BigInt::from(3), BigInt::zero(), 1),
        GaussianDyadic::from(2),
        GaussianDyadic::from(3),
    ]
}
