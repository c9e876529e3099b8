//! k-generalized values: T(n; k) = T(s)^(k-r) T(s+1)^r with n = sk + r.

use kmersenne::sequences::{
    decompose, gaussian_mersenne, k_gaussian_mersenne, k_mersenne, mersenne,
};
use kmersenne::{seq_stream, FamilyTag};

fn main() -> kmersenne::Result<()> {
    println!("M(20)         = {}", mersenne(20)?);
    println!("GM(5)         = {}", gaussian_mersenne(5)?);

    let d = decompose(17, 4)?;
    println!("17 = {}*4 + {}", d.s, d.r);
    println!("M(17; 4)      = {}", k_mersenne(17, 4)?);
    println!("GM(3; 5)      = {}", k_gaussian_mersenne(3, 5)?);

    let prefix: Vec<String> = seq_stream(FamilyTag::M, 12, 3)?
        .map(|t| t.to_string())
        .collect();
    println!("M(0..12; 3)   = {}", prefix.join(", "));

    let gm: Vec<String> = seq_stream(FamilyTag::GM, 6, 2)?
        .map(|t| t.to_string())
        .collect();
    println!("GM(0..6; 2)   = {}", gm.join(", "));
    Ok(())
}
