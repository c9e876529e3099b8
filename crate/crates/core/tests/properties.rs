mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::{from_dyadic, from_poly, from_term, oracle, oracle_k, parse_cell, QPoly, Q2};
use kmersenne::arith::pow;
use kmersenne::cli::{parse_record, JsonRecord};
use kmersenne::identities::{check_cassini, check_gaussian_split, expand_rational_series};
use kmersenne::{decompose, FamilyTag, GaussianDyadic, GaussianPolynomial};

fn dyadic() -> impl Strategy<Value = GaussianDyadic> {
    (-1000i64..1000, -1000i64..1000, 0u64..12)
        .prop_map(|(re, im, e)| GaussianDyadic::new(BigInt::from(re), BigInt::from(im), e))
}

fn gpoly() -> impl Strategy<Value = GaussianPolynomial> {
    prop::collection::vec(dyadic(), 0..6).prop_map(GaussianPolynomial::from_coeffs)
}

fn family() -> impl Strategy<Value = FamilyTag> {
    prop::sample::select(FamilyTag::ALL.to_vec())
}

fn is_canonical(g: &GaussianDyadic) -> bool {
    if g.is_zero() {
        return g.exp2() == 0;
    }
    g.exp2() == 0
        || g.re_num()
            .trailing_zeros()
            .unwrap_or(u64::MAX)
            .min(g.im_num().trailing_zeros().unwrap_or(u64::MAX))
            == 0
}

proptest! {
    #[test]
    fn dyadic_ring_axioms(a in dyadic(), b in dyadic(), c in dyadic()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &GaussianDyadic::one(), a.clone());
    }

    #[test]
    fn dyadic_results_are_canonical(a in dyadic(), b in dyadic()) {
        for v in [&a + &b, &a - &b, &a * &b, -&a, a.conj()] {
            prop_assert!(is_canonical(&v), "{:?}", v);
        }
    }

    #[test]
    fn dyadic_matches_rational_oracle(a in dyadic(), b in dyadic()) {
        prop_assert_eq!(from_dyadic(&(&a * &b)), from_dyadic(&a).mul(&from_dyadic(&b)));
        prop_assert_eq!(from_dyadic(&(&a - &b)), from_dyadic(&a).sub(&from_dyadic(&b)));
    }

    #[test]
    fn pow_is_repeated_multiplication(a in dyadic(), e in 0u64..9) {
        let repeated = (0..e).fold(GaussianDyadic::one(), |acc, _| &acc * &a);
        prop_assert_eq!(pow(&a, e), repeated);
    }

    #[test]
    fn inverse_when_it_exists(a in dyadic()) {
        if let Some(inv) = a.inverse() {
            prop_assert_eq!(&a * &inv, GaussianDyadic::one());
        }
    }

    #[test]
    fn poly_ring_and_eval(p in gpoly(), r in gpoly(), x in dyadic()) {
        prop_assert_eq!(&p * &r, &r * &p);
        prop_assert_eq!((&p * &r).eval(&x), &p.eval(&x) * &r.eval(&x));
        prop_assert_eq!((&p + &r).eval(&x), &p.eval(&x) + &r.eval(&x));
        prop_assert_eq!(from_poly(&(&p * &r)), from_poly(&p).mul(&from_poly(&r)));
        prop_assert!(p.coeffs().last().is_none_or(|c| !c.is_zero()));
    }

    #[test]
    fn decompose_is_euclidean(n in 0u64..1_000_000, k in 1u64..50) {
        let d = decompose(n, k).unwrap();
        prop_assert_eq!(d.s * k + d.r, n);
        prop_assert!(d.r < k);
    }

    #[test]
    fn k_equals_one_is_the_base_sequence(f in family(), n in 0u64..40) {
        prop_assert_eq!(from_term(&f.term(n, 1).unwrap()), oracle(f, n));
    }

    #[test]
    fn k_values_match_oracle(f in family(), n in 0u64..30, k in 1u64..6) {
        prop_assert_eq!(from_term(&f.term(n, k).unwrap()), oracle_k(f, n, k));
    }

    #[test]
    fn json_roundtrip(f in family(), n in 0u64..40, k in 1u64..6) {
        let term = f.term(n, k).unwrap();
        let text = serde_json::to_string(&JsonRecord::new(f, n, k, &term)).unwrap();
        let (family, back) = parse_record(&text).unwrap().to_term().unwrap();
        prop_assert_eq!(family, f);
        prop_assert_eq!(back, term);
    }

    #[test]
    fn series_convolution_vanishes(num in gpoly(), tail in prop::collection::vec(dyadic(), 0..4), count in 1usize..12) {
        let mut den = vec![GaussianDyadic::gaussian(1, 1)];
        den.extend(tail);
        let den = GaussianPolynomial::from_coeffs(den);
        let s = expand_rational_series(&num, &den, count).unwrap();
        prop_assert_eq!(s.coefficients.len(), count);
        prop_assert!(s.convolution_residual().iter().all(GaussianDyadic::is_zero));
    }

    #[test]
    fn cassini_far_out(n in 1u64..3000) {
        prop_assert!(check_cassini(FamilyTag::M, n).unwrap().holds);
        prop_assert!(check_cassini(FamilyTag::GM, n).unwrap().holds);
    }

    #[test]
    fn gaussian_split_far_out(n in 0u64..2000) {
        prop_assert!(check_gaussian_split(FamilyTag::GM, n).unwrap().holds);
    }
}

#[test]
fn oracle_self_check() {
    assert_eq!(
        parse_cell("-i/2"),
        QPoly::constant(Q2::int(0, -1).div_int(2))
    );
    assert_eq!(parse_cell("18+16i"), QPoly::constant(Q2::int(18, 16)));
    assert_eq!(parse_cell("(9x^2-1)+i6x"), parse_cell("9x^2-1+6xi"));
    assert_eq!(oracle(FamilyTag::M, 5), parse_cell("31"));
    assert_eq!(oracle(FamilyTag::GM, 0), parse_cell("-i/2"));
    assert_eq!(oracle(FamilyTag::MP, 3), parse_cell("9x^2-2"));
    assert_eq!(oracle_k(FamilyTag::GM, 0, 3), parse_cell("i/8"));
}
