//! Single identity checks, each returning both sides exactly.

use kmersenne::identities::{
    check_cassini, check_catalan_gaussian, check_docagne_gaussian, check_k_cassini,
    check_two_index, closed_form, IdentityReport,
};
use kmersenne::FamilyTag;

fn show(r: &IdentityReport) {
    let params: Vec<String> = r
        .parameters
        .iter()
        .map(|(p, v)| format!("{p}={v}"))
        .collect();
    println!(
        "{:<10} {:<4} {:<14} {}  lhs = {}  rhs = {}  [{}]",
        r.identity,
        r.family.map(|f| f.to_string()).unwrap_or_default(),
        params.join(","),
        r.orientation,
        r.lhs,
        r.rhs,
        if r.holds { "ok" } else { "FAIL" }
    );
}

fn main() -> kmersenne::Result<()> {
    show(&check_cassini(FamilyTag::M, 6)?);
    show(&check_cassini(FamilyTag::MP, 4)?);
    show(&check_cassini(FamilyTag::GM, 1)?);
    show(&check_cassini(FamilyTag::GMP, 3)?);
    show(&check_catalan_gaussian(5, 2)?);
    show(&check_docagne_gaussian(4, 7)?);
    show(&check_k_cassini(FamilyTag::M, 2, 2, 1)?);
    show(&check_k_cassini(FamilyTag::GM, 3, 3, 2)?);
    show(&check_two_index(FamilyTag::GM, 2, 1)?);

    // the Gaussian two-index right-hand side as sometimes stated is off by 2
    let stated = closed_form::two_index_as_printed(FamilyTag::GM, 2, 1);
    println!("two-index (GM, 2, 1) doubled rhs = {stated}");
    Ok(())
}
