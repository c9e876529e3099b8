//! Power-series expansion of z/(1-3z+2z^2) and its Gaussian counterpart.

use kmersenne::identities::{expand_rational_series, genfunc_denominator, genfunc_numerator};
use kmersenne::FamilyTag;

fn main() -> kmersenne::Result<()> {
    let den = genfunc_denominator();
    for family in [FamilyTag::M, FamilyTag::GM] {
        let num = genfunc_numerator(family)?;
        let series = expand_rational_series(&num, &den, 10)?;
        let coeffs: Vec<String> = series.coefficients.iter().map(|c| c.to_string()).collect();
        println!("{family}: ({num}) / ({den})");
        println!("    {}", coeffs.join(", "));
        let clean = series.convolution_residual().iter().all(|c| c.is_zero());
        println!("    convolution residual zero: {clean}");
    }
    Ok(())
}
