//! Mersenne polynomials M(n)(x) and their Gaussian analogue.

use kmersenne::polynomials::{
    gaussian_mersenne_poly, k_gaussian_mersenne_poly, k_mersenne_poly, mersenne_poly,
};
use kmersenne::GaussianDyadic;

fn main() -> kmersenne::Result<()> {
    for n in 0..=6 {
        println!("M({n})(x) = {}", mersenne_poly(n)?);
    }
    for n in 0..=5 {
        println!("GM({n})(x) = {}", gaussian_mersenne_poly(n)?);
    }
    println!("M(5; 2)(x) = {}", k_mersenne_poly(5, 2)?);
    println!("GM(5; 2)(x) = {}", k_gaussian_mersenne_poly(5, 2)?);

    // at x = 1 the polynomials collapse to the number sequences
    let one = GaussianDyadic::one();
    let p = gaussian_mersenne_poly(10)?;
    println!("GM(10)(1) = {}", p.eval(&one));

    let m = mersenne_poly(12)?;
    println!(
        "deg M(12)(x) = {:?}, leading coefficient {:?}",
        m.degree(),
        m.leading_coeff()
    );
    Ok(())
}
