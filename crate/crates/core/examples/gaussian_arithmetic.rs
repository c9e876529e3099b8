//! Exact arithmetic on (a + bi) / 2^e.

use kmersenne::GaussianDyadic;

fn main() {
    let half_i = GaussianDyadic::gaussian(0, -1).mul_pow2(-1); // -i/2
    let a = GaussianDyadic::gaussian(3, 1);
    let b = GaussianDyadic::gaussian(7, 3);

    println!("(3+i)(7+3i)   = {}", &a * &b);
    println!("(3+i)^2       = {}", a.pow(2));
    println!("(-i/2)^2      = {}", half_i.pow(2));
    println!("(-i/2)^3      = {}", half_i.pow(3));
    println!("(-i/2)^5      = {}", half_i.pow(5));
    println!("conj(3+i)     = {}", a.conj());

    // canonical form: 6/4 and 3/2 are the same value
    let six_quarters = GaussianDyadic::new(6.into(), 2.into(), 2);
    println!(
        "(6+2i)/4      = {six_quarters} (exp2 = {})",
        six_quarters.exp2()
    );

    match half_i.inverse() {
        Some(inv) => println!("1/(-i/2)      = {inv}"),
        None => println!("-i/2 has no dyadic inverse"),
    }
    println!(
        "1/3 dyadic?   {}",
        GaussianDyadic::from(3).inverse().is_some()
    );
}
