mod common;

use common::*;
use moment_forge::{GaussRat, LaurentPoly, MPoly};
use proptest::prelude::*;

/// Product by distributing over single terms, with no reuse of the sparse
/// multiplication kernel.
fn naive_mul(a: &MPoly, b: &MPoly) -> MPoly {
    let n = a.arity();
    let mut terms = Vec::new();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let e: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            terms.push((e, ca * cb));
        }
    }
    MPoly::from_terms(n, terms).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in mpoly(3, 3, 5), b in mpoly(3, 3, 5), c in mpoly(3, 3, 5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, MPoly::zero(3));
        prop_assert_eq!(&a * &MPoly::one(3), a.clone());
    }

    #[test]
    fn product_matches_naive_expansion(a in mpoly(2, 4, 6), b in mpoly(2, 4, 6)) {
        prop_assert_eq!(&a * &b, naive_mul(&a, &b));
    }

    #[test]
    fn pow_matches_repeated_products(a in mpoly(2, 2, 4), m in 0u32..7) {
        let mut naive = MPoly::one(2);
        for _ in 0..m {
            naive = naive_mul(&naive, &a);
        }
        prop_assert_eq!(a.pow(m), naive);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in mpoly(2, 3, 5), b in mpoly(2, 3, 5), x in point(2)) {
        let ev = |p: &MPoly| p.evaluate(&x).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), &ev(&a) * &ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), &ev(&a) + &ev(&b));
    }

    #[test]
    fn shifts_compose(p in mpoly(4, 3, 5), a in point(2), b in point(2)) {
        let ab: Vec<GaussRat> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        prop_assert_eq!(p.shift(&a).unwrap().shift(&b).unwrap(), p.shift(&ab).unwrap());
        prop_assert_eq!(p.shift(&[GaussRat::from_int(0), GaussRat::from_int(0)]).unwrap(), p);
    }

    #[test]
    fn laurent_ring_laws(a in laurent(2, 3, 5), b in laurent(2, 3, 5)) {
        prop_assert_eq!(&a * &b, &b * &a);
        let inv = |f: &LaurentPoly| f.invert_variables(&[0, 1]);
        prop_assert_eq!(inv(&(&a * &b)), &inv(&a) * &inv(&b));
        prop_assert_eq!(inv(&inv(&a)), a.clone());
    }

    #[test]
    fn linear_substitution_composes(p in mpoly(2, 3, 5)) {
        // rotation by the Pythagorean angle and its transpose
        let r = |s: i64| vec![
            vec![GaussRat::ratio(3, 5), GaussRat::ratio(4 * s, 5)],
            vec![GaussRat::ratio(-4 * s, 5), GaussRat::ratio(3, 5)],
        ];
        let back = p.substitute_linear(&r(1)).unwrap().substitute_linear(&r(-1)).unwrap();
        prop_assert_eq!(back, p);
    }
}
