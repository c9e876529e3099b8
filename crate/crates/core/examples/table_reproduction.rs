//! Prints the four T(n; k) grids for n <= 5, k <= 5.
//!
//! Cells whose reference value is a known misprint carry a `*`.

use kmersenne::cli::{render_table, OutputFormat};

fn main() -> kmersenne::Result<()> {
    for id in 1..=4 {
        print!("{}", render_table(id, 5, 5, OutputFormat::Plain)?);
        println!();
    }
    Ok(())
}
