use proptest::prelude::*;
use riordan_cli::parse_series_expr;
use riordan_core::fps::{ratio, Poly, Rational, Series};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..8).prop_map(Poly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printed_polynomials_parse_back(p in poly()) {
        let text = p.to_string();
        prop_assert_eq!(parse_series_expr(&text, 10).unwrap(), p.to_series(10), "{}", text);
    }

    #[test]
    fn quotient_times_denominator(p in poly(), q in poly(), c in 1i64..=5) {
        let den = format!("({c} + x*({q}))");
        let text = format!("({p}) / {den}");
        let quotient = parse_series_expr(&text, 12).unwrap();
        let back = quotient.mul(&parse_series_expr(&den, 12).unwrap());
        prop_assert_eq!(back, p.to_series(12));
    }

    #[test]
    fn square_root_of_square(p in poly()) {
        let text = format!("sqrt((1 + x*({p}))^2)");
        let want = parse_series_expr(&format!("1 + x*({p})"), 12).unwrap();
        prop_assert_eq!(parse_series_expr(&text, 12).unwrap(), want);
    }

    #[test]
    fn garbage_never_panics(text in "[-+*/^()x0-9 sqrt]{0,24}") {
        let _ = parse_series_expr(&text, 6);
    }
}

#[test]
fn negative_powers_are_inverses() {
    let a = parse_series_expr("(1 - x - x^2)^(-1)", 8).unwrap();
    assert_eq!(a, parse_series_expr("1/(1-x-x^2)", 8).unwrap());
    assert_eq!(a.mul(&parse_series_expr("1-x-x^2", 8).unwrap()), Series::one(8));
}
