mod common;

use common::*;
use moment_forge::functionals::{
    apply_en, gaussian_expectation, gaussian_expectation_of_product, halfdisk_integral,
    hermite_pairing, hermite_pairing_via_en, torus_ct,
};
use moment_forge::{GaussRat, MPoly};
use proptest::prelude::*;

fn reflect(p: &MPoly, j: usize) -> MPoly {
    let n = p.arity();
    let mut m: Vec<Vec<GaussRat>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| GaussRat::from_int(i64::from(r == c)))
                .collect()
        })
        .collect();
    m[j][j] = GaussRat::from_int(-1);
    p.substitute_linear(&m).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn functionals_are_linear(a in mpoly(2, 4, 5), b in mpoly(2, 4, 5), c in gauss()) {
        let comb = &a.scale(&c) + &b;
        prop_assert_eq!(
            gaussian_expectation(&comb),
            &(&gaussian_expectation(&a) * &c) + &gaussian_expectation(&b)
        );
        prop_assert_eq!(
            hermite_pairing(&comb).unwrap(),
            &(&hermite_pairing(&a).unwrap() * &c) + &hermite_pairing(&b).unwrap()
        );
        let h = halfdisk_integral(&comb).unwrap();
        let expected = &halfdisk_integral(&a).unwrap().scale(&c) + &halfdisk_integral(&b).unwrap();
        prop_assert_eq!(h, expected);
        let (fa, fb) = (a.to_laurent(), b.to_laurent());
        prop_assert_eq!(torus_ct(&(&fa.scale(&c) + &fb)), &(&torus_ct(&fa) * &c) + &torus_ct(&fb));
    }

    #[test]
    fn gaussian_is_even_in_each_variable(p in mpoly(3, 4, 6), j in 0usize..3) {
        prop_assert_eq!(gaussian_expectation(&reflect(&p, j)), gaussian_expectation(&p));
    }

    #[test]
    fn halfdisk_is_even_in_x(p in mpoly(2, 5, 6)) {
        prop_assert_eq!(halfdisk_integral(&reflect(&p, 0)).unwrap(), halfdisk_integral(&p).unwrap());
    }

    #[test]
    fn independent_blocks_factor(a in mpoly(1, 5, 4), b in mpoly(2, 4, 4)) {
        let a3 = a.embed(3, &[0]).unwrap();
        let b3 = b.embed(3, &[1, 2]).unwrap();
        prop_assert_eq!(
            gaussian_expectation(&(&a3 * &b3)),
            &gaussian_expectation(&a) * &gaussian_expectation(&b)
        );
    }

    #[test]
    fn product_route_matches_expansion(a in mpoly(3, 3, 6), b in mpoly(3, 3, 6)) {
        prop_assert_eq!(
            gaussian_expectation_of_product(&a, &b).unwrap(),
            gaussian_expectation(&(&a * &b))
        );
    }

    #[test]
    fn pairing_agrees_with_differential_operator(p in mpoly(4, 4, 8)) {
        prop_assert_eq!(hermite_pairing(&p).unwrap(), hermite_pairing_via_en(&p).unwrap());
    }

    #[test]
    fn shift_identity(p in mpoly(4, 3, 8), a in point(2)) {
        let lhs = apply_en(&p).unwrap().evaluate(&a).unwrap();
        let rhs = hermite_pairing(&p.shift(&a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn constant_term_ignores_inversion(f in laurent(2, 4, 8)) {
        prop_assert_eq!(torus_ct(&f.invert_variables(&[0])), torus_ct(&f));
        prop_assert_eq!(torus_ct(&f.invert_variables(&[0, 1])), torus_ct(&f));
    }

    #[test]
    fn gaussian_is_orthogonally_invariant(p in mpoly(2, 5, 6)) {
        let m = vec![
            vec![GaussRat::ratio(5, 13), GaussRat::ratio(12, 13)],
            vec![GaussRat::ratio(-12, 13), GaussRat::ratio(5, 13)],
        ];
        prop_assert_eq!(gaussian_expectation(&p.substitute_linear(&m).unwrap()), gaussian_expectation(&p));
    }
}
