//! Runs every identity suite over a reduced grid.

use kmersenne::identities::suites::{run_suite, GridConfig, Suite};

fn main() -> kmersenne::Result<()> {
    let config = GridConfig {
        n_max: Some(16),
        k_max: Some(4),
        family: None,
    };
    let mut all = true;
    for suite in Suite::ALL {
        let out = run_suite(suite, &config)?;
        all &= out.all_passed();
        println!("{:<12} {:>5}/{:<5}", suite, out.passed(), out.total());
    }
    println!("{}", if all { "all suites pass" } else { "FAILURES" });
    Ok(())
}
