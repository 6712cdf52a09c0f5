//! Seeded generators for the randomized property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{LaurentPoly, MPoly};
use crate::scalar::GaussRat;

/// A reproducible generator for stream `stream` of run `seed`.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Integer in `[-bound, bound]`.
pub fn small_int<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

/// A Gaussian rational with small numerators and denominators; real with
/// probability one half.
pub fn gauss_rat<R: Rng>(rng: &mut R, bound: i64) -> GaussRat {
    let re = GaussRat::ratio(small_int(rng, bound), rng.gen_range(1..=bound.max(1)));
    if rng.gen_bool(0.5) {
        re
    } else {
        let im = GaussRat::ratio(small_int(rng, bound), rng.gen_range(1..=bound.max(1)));
        &re + &(&im * &GaussRat::i())
    }
}

/// Exponent vector of total degree at most `max_degree`.
pub fn exponents<R: Rng>(rng: &mut R, arity: usize, max_degree: u32) -> Vec<u32> {
    let degree = rng.gen_range(0..=max_degree);
    let mut e = vec![0u32; arity];
    if arity > 0 {
        for _ in 0..degree {
            e[rng.gen_range(0..arity)] += 1;
        }
    }
    e
}

/// Sparse polynomial with up to `max_terms` terms and Gaussian-rational
/// coefficients.
pub fn mpoly<R: Rng>(rng: &mut R, arity: usize, max_degree: u32, max_terms: usize) -> MPoly {
    let k = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..k)
        .map(|_| (exponents(rng, arity, max_degree), gauss_rat(rng, 5)))
        .collect();
    MPoly::from_terms(arity, terms).expect("arity matches")
}

/// Polynomial with integer coefficients in `[-bound, bound]`.
pub fn int_poly<R: Rng>(
    rng: &mut R,
    arity: usize,
    max_degree: u32,
    max_terms: usize,
    bound: i64,
) -> MPoly {
    let k = rng.gen_range(1..=max_terms);
    let mut terms: Vec<_> = (0..k)
        .map(|_| {
            (
                exponents(rng, arity, max_degree),
                GaussRat::from_int(small_int(rng, bound)),
            )
        })
        .collect();
    terms.push((vec![0; arity], GaussRat::from_int(small_int(rng, bound))));
    MPoly::from_terms(arity, terms).expect("arity matches")
}

/// Laurent polynomial with exponents in `[-max_abs, max_abs]`.
pub fn laurent<R: Rng>(rng: &mut R, arity: usize, max_abs: i32, max_terms: usize) -> LaurentPoly {
    let k = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..k)
        .map(|_| {
            let e: Vec<i32> = (0..arity)
                .map(|_| rng.gen_range(-max_abs..=max_abs))
                .collect();
            (e, gauss_rat(rng, 5))
        })
        .collect();
    LaurentPoly::from_terms(arity, terms).expect("arity matches")
}

/// A polynomial in `(x_1..x_n, y_1..y_n)` homogeneous of degree `degrees[k]`
/// in each pair `(x_k, y_k)`.
///
/// Terms are drawn in the basis `∏ (x_k + iy_k)^{a_k} (x_k − iy_k)^{d_k − a_k}`.
/// With `chiral` set, each `a_k` is forced above `d_k / 2`, which makes every
/// Gaussian moment of every power vanish.
pub fn doubly_homogeneous<R: Rng>(
    rng: &mut R,
    degrees: &[u32],
    max_terms: usize,
    chiral: bool,
) -> MPoly {
    let n = degrees.len();
    let arity = 2 * n;
    let plus: Vec<MPoly> = (0..n)
        .map(|k| MPoly::var(arity, k) + MPoly::var(arity, n + k).scale(&GaussRat::i()))
        .collect();
    let minus: Vec<MPoly> = (0..n)
        .map(|k| MPoly::var(arity, k) - MPoly::var(arity, n + k).scale(&GaussRat::i()))
        .collect();
    let k = rng.gen_range(1..=max_terms);
    let mut acc = MPoly::zero(arity);
    for _ in 0..k {
        let mut term = MPoly::constant(arity, gauss_rat(rng, 4));
        for (j, &d) in degrees.iter().enumerate() {
            let lo = if chiral && d > 0 { d / 2 + 1 } else { 0 };
            let a = rng.gen_range(lo..=d);
            term = &term * &plus[j].pow(a);
            term = &term * &minus[j].pow(d - a);
        }
        acc = &acc + &term;
    }
    if acc.is_zero() {
        // a cancellation; fall back to a single basis element
        let mut term = MPoly::one(arity);
        for (j, &d) in degrees.iter().enumerate() {
            term = &term * &plus[j].pow(d);
        }
        acc = term;
    }
    acc
}

/// A shuffled list of `n` distinct variable names.
pub fn variable_names<R: Rng>(rng: &mut R, n: usize) -> Vec<String> {
    let mut pool: Vec<String> = ["x", "y", "z", "w", "u", "v", "t", "s"]
        .iter()
        .map(|s| s.to_string())
        .chain((1..=4).flat_map(|k| [format!("x{k}"), format!("y{k}"), format!("w_{k}")]))
        .collect();
    pool.shuffle(rng);
    pool.truncate(n);
    pool
}
