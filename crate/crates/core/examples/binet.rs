//! Binet forms of M(n)(x) and GM(n)(x) against the exact polynomials.

use kmersenne::polynomials::{binet_numeric_check, default_binet_samples, QuadraticRoots};

fn main() -> kmersenne::Result<()> {
    let roots = QuadraticRoots::at(1.0)?;
    println!("x = 1: lambda = {}, {}", roots.lambda1, roots.lambda2);

    println!(
        "{:>3} {:>6} {:>24} {:>12} {:>12}",
        "n", "x0", "M(n)(x0)", "rel err M", "rel err GM"
    );
    for x0 in default_binet_samples() {
        for n in [5, 20, 40] {
            let c = binet_numeric_check(n, &x0, 1e-8)?;
            println!(
                "{:>3} {:>6} {:>24.6e} {:>12.2e} {:>12.2e}",
                c.n, c.x0, c.mersenne_exact, c.mersenne_rel_error, c.gaussian_rel_error
            );
        }
    }
    Ok(())
}
