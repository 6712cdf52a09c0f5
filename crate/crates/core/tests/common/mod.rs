#![allow(dead_code)]

use moment_forge::{GaussRat, LaurentPoly, MPoly};
use proptest::collection::vec;
use proptest::prelude::*;

pub fn gauss() -> impl Strategy<Value = GaussRat> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4, any::<bool>()).prop_map(|(a, b, c, d, complex)| {
        let re = GaussRat::ratio(a, b);
        if complex {
            &re + &(&GaussRat::ratio(c, d) * &GaussRat::i())
        } else {
            re
        }
    })
}

pub fn nonzero_gauss() -> impl Strategy<Value = GaussRat> {
    gauss().prop_filter("nonzero", |c| *c != GaussRat::from_int(0))
}

/// Polynomials with every exponent at most `max_exp`.
pub fn mpoly(arity: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = MPoly> {
    vec((vec(0..=max_exp, arity), gauss()), 0..=max_terms)
        .prop_map(move |terms| MPoly::from_terms(arity, terms).unwrap())
}

pub fn int_mpoly(arity: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = MPoly> {
    vec((vec(0..=max_exp, arity), -9i64..=9), 0..=max_terms).prop_map(move |terms| {
        MPoly::from_terms(
            arity,
            terms.into_iter().map(|(e, c)| (e, GaussRat::from_int(c))),
        )
        .unwrap()
    })
}

pub fn laurent(arity: usize, max_abs: i32, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    vec((vec(-max_abs..=max_abs, arity), gauss()), 0..=max_terms)
        .prop_map(move |terms| LaurentPoly::from_terms(arity, terms).unwrap())
}

pub fn point(n: usize) -> impl Strategy<Value = Vec<GaussRat>> {
    vec(gauss(), n)
}

pub fn names(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("x{k}")).collect()
}
