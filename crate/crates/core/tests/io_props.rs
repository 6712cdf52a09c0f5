mod common;

use common::*;
use moment_forge::io::{format_poly, parse_laurent, parse_mpoly, parse_poly, PolySource, Ring};
use proptest::prelude::*;

fn refs(names: &[String]) -> Vec<&str> {
    names.iter().map(String::as_str).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn polynomial_round_trip(p in mpoly(3, 5, 8)) {
        let names = names(3);
        let text = format_poly(&p, &names);
        let back = parse_mpoly(&text, &refs(&names)).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(format_poly(&back, &names), text);
    }

    #[test]
    fn laurent_round_trip(f in laurent(2, 5, 8)) {
        let names = names(2);
        let text = format_poly(&f, &names);
        prop_assert_eq!(parse_laurent(&text, &refs(&names)).unwrap(), f);
    }

    #[test]
    fn parser_is_total(s in "\\PC{0,30}", laurent in any::<bool>()) {
        let ring = if laurent { Ring::Laurent } else { Ring::Poly };
        if let Err(e) = parse_poly(&PolySource::new(s, ring, &["x", "y"])) {
            prop_assert!(e.line >= 1 && e.column >= 1);
        }
    }

    #[test]
    fn token_strings_never_panic(s in "[xy0-9i()+*^/ -]{0,24}") {
        let _ = parse_poly(&PolySource::new(s, Ring::Laurent, &["x", "y"]));
    }
}
