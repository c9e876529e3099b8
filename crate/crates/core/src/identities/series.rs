use crate::arith::{GaussianDyadic, GaussianPolynomial};
use crate::error::{Error, Result};
use crate::sequences::FamilyTag;

/// Truncated power-series expansion of `numerator / denominator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    pub numerator: GaussianPolynomial,
    pub denominator: GaussianPolynomial,
    pub coefficients: Vec<GaussianDyadic>,
}

impl RationalSeries {
    /// `(Σ cⱼzʲ)·den - num`, truncated to the computed order. All zero for a
    /// correct expansion.
    pub fn convolution_residual(&self) -> Vec<GaussianDyadic> {
        let prefix = GaussianPolynomial::from_coeffs(self.coefficients.clone());
        let residual = &prefix * &self.denominator - &self.numerator;
        (0..self.coefficients.len())
            .map(|j| residual.coeff(j))
            .collect()
    }
}

/// First `count` coefficients of `num / den` by exact long division.
///
/// The constant term of `den` must be invertible among Gaussian dyadics
/// (nonzero with a power-of-two norm).
pub fn expand_rational_series(
    num: &GaussianPolynomial,
    den: &GaussianPolynomial,
    count: usize,
) -> Result<RationalSeries> {
    if count == 0 {
        return Err(Error::BelowMinimum {
            name: "count",
            value: 0,
            min: 1,
        });
    }
    let inv = den.coeff(0).inverse().ok_or(Error::NonInvertibleConstant)?;
    let den_coeffs = den.coeffs();
    let mut coefficients: Vec<GaussianDyadic> = Vec::with_capacity(count);
    for j in 0..count {
        let mut acc = num.coeff(j);
        for (i, d) in den_coeffs.iter().enumerate().take(j + 1).skip(1) {
            acc = &acc - &(d * &coefficients[j - i]);
        }
        coefficients.push(&acc * &inv);
    }
    Ok(RationalSeries {
        numerator: num.clone(),
        denominator: den.clone(),
        coefficients,
    })
}

/// `1 - 3z + 2z²`, shared by both generating functions.
pub fn genfunc_denominator() -> GaussianPolynomial {
    GaussianPolynomial::from_coeffs(vec![1.into(), (-3).into(), 2.into()])
}

/// `z` for `M`; `z + i(3z/2 - 1/2)` for `GM`.
pub fn genfunc_numerator(family: FamilyTag) -> Result<GaussianPolynomial> {
    match family {
        FamilyTag::M => Ok(GaussianPolynomial::x()),
        FamilyTag::GM => Ok(GaussianPolynomial::from_coeffs(vec![
            GaussianDyadic::new(0.into(), (-1).into(), 1),
            GaussianDyadic::new(2.into(), 3.into(), 1),
        ])),
        other => Err(Error::UnsupportedFamily {
            family: other,
            operation: "generating function",
        }),
    }
}
