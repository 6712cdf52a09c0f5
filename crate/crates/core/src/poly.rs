//! Sparse multivariate polynomials over ℚ(i), ordinary and Laurent.
//!
//! A polynomial is a map from exponent vectors to nonzero coefficients. The
//! map is ordered graded-lexicographically with the leading monomial first,
//! which fixes the canonical iteration and print order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Deref, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::GaussRat;

pub const DEFAULT_DEGREE_CAP: u64 = 10_000;
const MAX_DEGREE_CAP: u64 = 1 << 30;

static DEGREE_CAP: AtomicU64 = AtomicU64::new(DEFAULT_DEGREE_CAP);

/// Current cap on the total degree (sum of absolute exponents) of any
/// product or power.
pub fn degree_cap() -> u64 {
    DEGREE_CAP.load(AtomicOrdering::Relaxed)
}

/// Sets the process-wide degree cap. Values above 2^30 are clamped so that
/// exponent sums can never overflow the 32-bit exponent types.
pub fn set_degree_cap(cap: u64) {
    DEGREE_CAP.store(cap.min(MAX_DEGREE_CAP), AtomicOrdering::Relaxed);
}

pub fn check_degree(degree: u64) -> Result<()> {
    let cap = degree_cap();
    if degree > cap {
        Err(Error::DegreeCap { degree, cap })
    } else {
        Ok(())
    }
}

pub trait Exponent:
    Copy + Ord + Hash + Debug + Display + Default + Send + Sync + Add<Output = Self> + 'static
{
    const SIGNED: bool;
    fn to_i64(self) -> i64;
    fn from_i64(v: i64) -> Option<Self>;
}

impl Exponent for u32 {
    const SIGNED: bool = false;
    fn to_i64(self) -> i64 {
        self as i64
    }
    fn from_i64(v: i64) -> Option<Self> {
        u32::try_from(v).ok()
    }
}

impl Exponent for i32 {
    const SIGNED: bool = true;
    fn to_i64(self) -> i64 {
        self as i64
    }
    fn from_i64(v: i64) -> Option<Self> {
        i32::try_from(v).ok()
    }
}

/// An exponent vector. Ordered so that the graded-lex leading monomial
/// compares smallest.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial<E: Exponent>(SmallVec<[E; 4]>);

impl<E: Exponent> Monomial<E> {
    pub fn new(exps: &[E]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn one(arity: usize) -> Self {
        Monomial(SmallVec::from_elem(E::default(), arity))
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|e| e.to_i64()).sum()
    }

    pub fn abs_degree(&self) -> u64 {
        self.0.iter().map(|e| e.to_i64().unsigned_abs()).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| *e == E::default())
    }

    fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }
}

/// A term with its coefficient as a Gaussian integer `(re, im)`.
pub(crate) type IntegerTerm<'a, E> = (&'a Monomial<E>, BigInt, BigInt);

impl<E: Exponent> Deref for Monomial<E> {
    type Target = [E];
    fn deref(&self) -> &[E] {
        &self.0
    }
}

impl<E: Exponent> Debug for Monomial<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl<E: Exponent> Ord for Monomial<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl<E: Exponent> PartialOrd for Monomial<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `arity` variables with exponents of type `E`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly<E: Exponent> {
    arity: usize,
    terms: BTreeMap<Monomial<E>, GaussRat>,
}

/// Polynomials in ℚ(i)[x_1, …, x_n].
pub type MPoly = SparsePoly<u32>;
/// Laurent polynomials in ℚ(i)[x_1^{±1}, …, x_n^{±1}].
pub type LaurentPoly = SparsePoly<i32>;

impl<E: Exponent> SparsePoly<E> {
    pub fn zero(arity: usize) -> Self {
        SparsePoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: GaussRat) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(arity), c);
        }
        p
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, GaussRat::one())
    }

    /// The variable `x_j` (0-based).
    pub fn var(arity: usize, j: usize) -> Self {
        assert!(
            j < arity,
            "variable index {j} out of range for arity {arity}"
        );
        let mut m = Monomial::one(arity);
        m.0[j] = E::from_i64(1).unwrap();
        let mut p = Self::zero(arity);
        p.terms.insert(m, GaussRat::one());
        p
    }

    /// `c·x^exps`. Panics if `exps.len() != arity`.
    pub fn monomial(arity: usize, exps: &[E], c: GaussRat) -> Self {
        assert_eq!(exps.len(), arity, "exponent vector length");
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Monomial::new(exps), c);
        }
        p
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, merging
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<E>, GaussRat)>,
    {
        let mut map: BTreeMap<Monomial<E>, GaussRat> = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != arity {
                return Err(Error::DimensionMismatch {
                    expected: arity,
                    got: exps.len(),
                });
            }
            *map.entry(Monomial::new(&exps)).or_default() += &c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(SparsePoly { arity, terms: map })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order, leading monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (&[E], &GaussRat)> + '_ {
        self.terms.iter().map(|(m, c)| (&m[..], c))
    }

    pub fn coeff(&self, exps: &[E]) -> GaussRat {
        self.terms
            .get(&Monomial::new(exps))
            .cloned()
            .unwrap_or_default()
    }

    /// Coefficient of the zero exponent vector.
    pub fn constant_term(&self) -> GaussRat {
        self.terms
            .get(&Monomial::one(self.arity))
            .cloned()
            .unwrap_or_default()
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest sum of absolute exponents over all terms (0 for zero).
    pub fn abs_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(Monomial::abs_degree)
            .max()
            .unwrap_or(0)
    }

    /// True when every term has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn same_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    fn add_term(&mut self, m: Monomial<E>, c: &GaussRat) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c.clone());
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        SparsePoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Sparse product. Coefficients are brought to a common denominator so
    /// the inner loop runs on Gaussian integers, then merged in a hash-map
    /// accumulator and canonicalized.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        check_degree(self.abs_degree() + other.abs_degree())?;

        let (da, a) = self.integer_terms();
        let (db, b) = other.integer_terms();
        let a_real = a.iter().all(|(_, _, im)| im.is_zero());
        let b_real = b.iter().all(|(_, _, im)| im.is_zero());

        let mut acc: FxHashMap<Monomial<E>, (BigInt, BigInt)> = FxHashMap::default();
        acc.reserve(a.len().max(b.len()) * 2);
        for (ma, ar, ai) in &a {
            for (mb, br, bi) in &b {
                let slot = acc.entry(ma.mul(mb)).or_default();
                slot.0 += ar * br;
                if !(a_real && b_real) {
                    if !ai.is_zero() && !bi.is_zero() {
                        slot.0 -= ai * bi;
                    }
                    if !bi.is_zero() {
                        slot.1 += ar * bi;
                    }
                    if !ai.is_zero() {
                        slot.1 += ai * br;
                    }
                }
            }
        }

        let den = da * db;
        let mut terms = BTreeMap::new();
        for (m, (re, im)) in acc {
            if re.is_zero() && im.is_zero() {
                continue;
            }
            let c = GaussRat::new(
                BigRational::new(re, den.clone()),
                BigRational::new(im, den.clone()),
            );
            terms.insert(m, c);
        }
        Ok(SparsePoly {
            arity: self.arity,
            terms,
        })
    }

    /// Common denominator `d` and the terms scaled by `d` as integer pairs.
    pub(crate) fn integer_terms(&self) -> (BigInt, Vec<IntegerTerm<'_, E>>) {
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.re().denom());
            den = den.lcm(c.im().denom());
        }
        let scaled = self
            .terms
            .iter()
            .map(|(m, c)| {
                let re = (c.re() * &den).to_integer();
                let im = (c.im() * &den).to_integer();
                (m, re, im)
            })
            .collect();
        (den, scaled)
    }

    /// `self^m` by repeated squaring; `p^0 = 1` (including `0^0`).
    pub fn try_pow(&self, m: u32) -> Result<Self> {
        check_degree(self.abs_degree().saturating_mul(m as u64))?;
        let mut acc = Self::one(self.arity);
        if m == 0 {
            return Ok(acc);
        }
        let mut base = self.clone();
        let mut e = m;
        loop {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.try_mul(&base)?;
        }
        Ok(acc)
    }

    /// Panicking form of [`try_pow`](Self::try_pow).
    pub fn pow(&self, m: u32) -> Self {
        self.try_pow(m).unwrap_or_else(|e| panic!("pow: {e}"))
    }

    /// Renames variables into a larger ring: variable `j` becomes variable
    /// `map[j]` of a ring of arity `target_arity`.
    pub fn embed(&self, target_arity: usize, map: &[usize]) -> Result<Self> {
        if map.len() != self.arity {
            return Err(Error::DimensionMismatch {
                expected: self.arity,
                got: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&j| j >= target_arity) {
            return Err(Error::DimensionMismatch {
                expected: target_arity,
                got: bad + 1,
            });
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![E::default(); target_arity];
            for (j, &x) in m.iter().enumerate() {
                e[map[j]] = e[map[j]] + x;
            }
            (e, c.clone())
        });
        Self::from_terms(target_arity, terms)
    }

    /// Arity-checked evaluation of each monomial through `f`, summed.
    fn map_terms<F, T>(&self, f: F) -> Result<SparsePoly<T>>
    where
        T: Exponent,
        F: Fn(&[E]) -> Option<Vec<T>>,
    {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = f(m).ok_or(Error::ExponentOverflow)?;
            terms.push((e, c.clone()));
        }
        let arity = terms.first().map(|t| t.0.len()).unwrap_or(self.arity);
        SparsePoly::from_terms(arity, terms)
    }
}

impl MPoly {
    /// Views the polynomial as a Laurent polynomial.
    pub fn to_laurent(&self) -> LaurentPoly {
        self.map_terms(|m| m.iter().map(|&e| i32::try_from(e).ok()).collect())
            .expect("degree cap keeps exponents within i32")
    }

    /// Evaluates at a point of ℚ(i)^n.
    pub fn evaluate(&self, point: &[GaussRat]) -> Result<GaussRat> {
        if point.len() != self.arity {
            return Err(Error::DimensionMismatch {
                expected: self.arity,
                got: point.len(),
            });
        }
        let mut powers: Vec<Vec<GaussRat>> = point
            .iter()
            .map(|p| vec![GaussRat::one(), p.clone()])
            .collect();
        let mut total = GaussRat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (j, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[j];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &point[j];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            total += &t;
        }
        Ok(total)
    }

    /// Substitutes `images[j]` for `x_j`: returns `P(images)`.
    pub fn compose<F: Exponent>(&self, images: &[SparsePoly<F>]) -> Result<SparsePoly<F>> {
        if images.len() != self.arity {
            return Err(Error::DimensionMismatch {
                expected: self.arity,
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(img) => img.arity,
            None => 0,
        };
        if let Some(bad) = images.iter().find(|img| img.arity != target) {
            return Err(Error::ArityMismatch {
                left: target,
                right: bad.arity,
            });
        }
        let mut powers: Vec<Vec<SparsePoly<F>>> = images
            .iter()
            .map(|img| vec![SparsePoly::one(target), img.clone()])
            .collect();
        let mut out = SparsePoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = SparsePoly::constant(target, c.clone());
            for (j, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[j];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().try_mul(&images[j])?;
                    cache.push(next);
                }
                t = t.try_mul(&cache[e as usize])?;
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }

    /// `P(x_0, …, x_{s-1}, x_s + a_0, x_{s+1} + a_1, …)` with `s = start`.
    pub fn shift_block(&self, start: usize, a: &[GaussRat]) -> Result<MPoly> {
        if start + a.len() > self.arity {
            return Err(Error::DimensionMismatch {
                expected: self.arity - start.min(self.arity),
                got: a.len(),
            });
        }
        let images: Vec<MPoly> = (0..self.arity)
            .map(|j| {
                let x = MPoly::var(self.arity, j);
                if j >= start && j < start + a.len() {
                    x + MPoly::constant(self.arity, a[j - start].clone())
                } else {
                    x
                }
            })
            .collect();
        self.compose(&images)
    }

    /// Translates the trailing `a.len()` variables (the `z`-block of a
    /// `(w, z)` split) by `a`.
    pub fn shift(&self, a: &[GaussRat]) -> Result<MPoly> {
        if a.len() > self.arity {
            return Err(Error::DimensionMismatch {
                expected: self.arity,
                got: a.len(),
            });
        }
        self.shift_block(self.arity - a.len(), a)
    }

    /// `P(Mx)`: each `x_j` is replaced by the `j`-th entry of `Mx`.
    pub fn substitute_linear(&self, matrix: &[Vec<GaussRat>]) -> Result<MPoly> {
        let n = self.arity;
        check_square(matrix.len(), matrix.iter().map(Vec::len), n)?;
        let images: Vec<MPoly> = matrix
            .iter()
            .map(|row| {
                let terms = row.iter().enumerate().map(|(k, c)| {
                    let mut e = vec![0u32; n];
                    e[k] = 1;
                    (e, c.clone())
                });
                MPoly::from_terms(n, terms)
            })
            .collect::<Result<_>>()?;
        self.compose(&images)
    }

    /// `P(λ(t)x)` for a matrix of univariate Laurent polynomials in `t`.
    /// The result lives in the Laurent ring of arity `n + 1` with `t` as
    /// variable 0 and `x_j` as variable `j + 1`.
    pub fn substitute_linear_laurent(&self, matrix: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
        let n = self.arity;
        check_square(matrix.len(), matrix.iter().map(Vec::len), n)?;
        let mut images = Vec::with_capacity(n);
        for row in matrix {
            let mut img = LaurentPoly::zero(n + 1);
            for (k, entry) in row.iter().enumerate() {
                if entry.arity() != 1 {
                    return Err(Error::ArityMismatch {
                        left: 1,
                        right: entry.arity(),
                    });
                }
                let lifted = entry.embed(n + 1, &[0])?;
                img = img.try_add(&lifted.try_mul(&LaurentPoly::var(n + 1, k + 1))?)?;
            }
            images.push(img);
        }
        self.compose(&images)
    }
}

fn check_square(rows: usize, cols: impl Iterator<Item = usize>, n: usize) -> Result<()> {
    if rows != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: rows,
        });
    }
    for c in cols {
        if c != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: c,
            });
        }
    }
    Ok(())
}

impl LaurentPoly {
    /// The polynomial itself if no exponent is negative.
    pub fn to_poly(&self) -> Option<MPoly> {
        self.map_terms(|m| m.iter().map(|&e| u32::try_from(e).ok()).collect())
            .ok()
    }

    /// Replaces `z_j` by `z_j^{-1}` for every `j` in `vars`.
    pub fn invert_variables(&self, vars: &[usize]) -> LaurentPoly {
        self.map_terms(|m| {
            Some(
                m.iter()
                    .enumerate()
                    .map(|(j, &e)| if vars.contains(&j) { -e } else { e })
                    .collect(),
            )
        })
        .expect("negation of an in-range exponent")
    }

    /// Smallest exponent of variable `j` over all terms.
    pub fn min_exponent(&self, j: usize) -> Option<i32> {
        self.terms.keys().map(|m| m[j]).min()
    }

    /// Largest exponent of variable `j` over all terms.
    pub fn max_exponent(&self, j: usize) -> Option<i32> {
        self.terms.keys().map(|m| m[j]).max()
    }

    /// `F^m` for any integer `m`; negative powers require `F` to be a
    /// single term.
    pub fn try_pow_signed(&self, m: i64) -> Result<LaurentPoly> {
        if m >= 0 {
            let m = u32::try_from(m).map_err(|_| Error::ExponentOverflow)?;
            return self.try_pow(m);
        }
        let (mono, c) = match self.terms.iter().next() {
            Some(t) if self.len() == 1 => t,
            _ => {
                return Err(Error::Invalid(
                    "only a single-term Laurent polynomial can be inverted".into(),
                ))
            }
        };
        let inv = SparsePoly::monomial(
            self.arity,
            &mono.iter().map(|&e| -e).collect::<Vec<_>>(),
            c.inv()?,
        );
        inv.try_pow((-m) as u32)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<'a, E: Exponent> $tr<&'a SparsePoly<E>> for &'a SparsePoly<E> {
            type Output = SparsePoly<E>;
            fn $m(self, o: &SparsePoly<E>) -> SparsePoly<E> {
                self.$f(o)
                    .unwrap_or_else(|e| panic!("{}: {e}", stringify!($m)))
            }
        }
        impl<E: Exponent> $tr<SparsePoly<E>> for SparsePoly<E> {
            type Output = SparsePoly<E>;
            fn $m(self, o: SparsePoly<E>) -> SparsePoly<E> {
                (&self).$m(&o)
            }
        }
        impl<'a, E: Exponent> $tr<&'a SparsePoly<E>> for SparsePoly<E> {
            type Output = SparsePoly<E>;
            fn $m(self, o: &SparsePoly<E>) -> SparsePoly<E> {
                (&self).$m(o)
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl<E: Exponent> Neg for &SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn neg(self) -> SparsePoly<E> {
        SparsePoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<E: Exponent> Neg for SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn neg(self) -> SparsePoly<E> {
        -&self
    }
}

impl<E: Exponent> Debug for SparsePoly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(m, c)| (m, c.to_string())))
            .finish()
    }
}

/// A polynomial from either ring, as accepted by the functionals and the
/// harness.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AnyPoly {
    Poly(MPoly),
    Laurent(LaurentPoly),
}

impl AnyPoly {
    pub fn arity(&self) -> usize {
        match self {
            AnyPoly::Poly(p) => p.arity(),
            AnyPoly::Laurent(p) => p.arity(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            AnyPoly::Poly(p) => p.is_zero(),
            AnyPoly::Laurent(p) => p.is_zero(),
        }
    }

    pub fn abs_degree(&self) -> u64 {
        match self {
            AnyPoly::Poly(p) => p.abs_degree(),
            AnyPoly::Laurent(p) => p.abs_degree(),
        }
    }

    /// Product within a common ring; an ordinary polynomial is promoted when
    /// the other factor is Laurent.
    pub fn try_mul(&self, other: &AnyPoly) -> Result<AnyPoly> {
        match (self, other) {
            (AnyPoly::Poly(a), AnyPoly::Poly(b)) => Ok(AnyPoly::Poly(a.try_mul(b)?)),
            _ => Ok(AnyPoly::Laurent(
                self.as_laurent().try_mul(&other.as_laurent())?,
            )),
        }
    }

    pub fn try_pow(&self, m: u32) -> Result<AnyPoly> {
        Ok(match self {
            AnyPoly::Poly(p) => AnyPoly::Poly(p.try_pow(m)?),
            AnyPoly::Laurent(p) => AnyPoly::Laurent(p.try_pow(m)?),
        })
    }

    pub fn one_like(&self) -> AnyPoly {
        match self {
            AnyPoly::Poly(p) => AnyPoly::Poly(MPoly::one(p.arity())),
            AnyPoly::Laurent(p) => AnyPoly::Laurent(LaurentPoly::one(p.arity())),
        }
    }

    pub fn as_laurent(&self) -> LaurentPoly {
        match self {
            AnyPoly::Poly(p) => p.to_laurent(),
            AnyPoly::Laurent(p) => p.clone(),
        }
    }

    /// The ordinary polynomial, if no exponent is negative.
    pub fn as_poly(&self) -> Option<MPoly> {
        match self {
            AnyPoly::Poly(p) => Some(p.clone()),
            AnyPoly::Laurent(p) => p.to_poly(),
        }
    }
}

impl From<MPoly> for AnyPoly {
    fn from(p: MPoly) -> Self {
        AnyPoly::Poly(p)
    }
}

impl From<LaurentPoly> for AnyPoly {
    fn from(p: LaurentPoly) -> Self {
        AnyPoly::Laurent(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x2() -> (MPoly, MPoly) {
        (MPoly::var(2, 0), MPoly::var(2, 1))
    }

    fn c(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn difference_of_squares_over_gaussian_rationals() {
        let (x, y) = x2();
        let iy = y.scale(&GaussRat::i());
        let p = (&x + &iy) * (&x - &iy);
        assert_eq!(p, &x * &x + &y * &y);
    }

    #[test]
    fn additive_identity() {
        let (x, y) = x2();
        let p = &x * &y + x.scale(&c(3));
        assert_eq!(&p + &MPoly::zero(2), p);
    }

    #[test]
    fn binomial_square() {
        let x = MPoly::var(1, 0);
        let p = &x * &x - MPoly::one(1);
        let sq = &p * &p;
        let expected =
            MPoly::from_terms(1, [(vec![4], c(1)), (vec![2], c(-2)), (vec![0], c(1))]).unwrap();
        assert_eq!(sq, expected);
        assert_eq!(p.pow(2), expected);
    }

    #[test]
    fn pow_examples() {
        let (x, y) = x2();
        let p = &x + &y.scale(&GaussRat::i());
        let expected = MPoly::from_terms(
            2,
            [
                (vec![2, 0], c(1)),
                (vec![1, 1], GaussRat::gaussian_int(0, 2)),
                (vec![0, 2], c(-1)),
            ],
        )
        .unwrap();
        assert_eq!(p.pow(2), expected);
        assert_eq!(p.pow(0), MPoly::one(2));
        assert_eq!(MPoly::zero(2).pow(0), MPoly::one(2));
    }

    #[test]
    fn canonical_order_is_graded_lex_leading_first() {
        let (x, y) = x2();
        let p = (&x + &y).pow(2) + MPoly::one(2) + x.clone();
        let order: Vec<Vec<u32>> = p.terms().map(|(m, _)| m.to_vec()).collect();
        assert_eq!(
            order,
            vec![vec![2, 0], vec![1, 1], vec![0, 2], vec![1, 0], vec![0, 0]]
        );
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = MPoly::var(2, 0);
        let b = MPoly::var(3, 0);
        assert_eq!(
            a.try_add(&b),
            Err(Error::ArityMismatch { left: 2, right: 3 })
        );
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn degree_cap_fails_loudly() {
        let x = MPoly::var(1, 0);
        let err = x.try_pow(20_000).unwrap_err();
        assert!(matches!(err, Error::DegreeCap { degree: 20_000, .. }));
    }

    #[test]
    fn shift_examples() {
        let z = MPoly::var(1, 0);
        let shifted = (&z * &z).shift(&[c(1)]).unwrap();
        assert_eq!(shifted, &z * &z + z.scale(&c(2)) + MPoly::one(1));

        let (w, zz) = x2();
        let p = &w * &zz;
        assert_eq!(p.shift(&[c(0)]).unwrap(), p);
        let k = GaussRat::gaussian_int(2, -1);
        assert_eq!(
            p.shift(std::slice::from_ref(&k)).unwrap(),
            &p + &w.scale(&k)
        );
        assert!(p.shift(&[c(1), c(2), c(3)]).is_err());
    }

    #[test]
    fn orthogonal_substitution_fixes_the_quadratic_form() {
        let (x, y) = x2();
        let q = &x * &x + &y * &y;
        let m = vec![
            vec![GaussRat::ratio(3, 5), GaussRat::ratio(4, 5)],
            vec![GaussRat::ratio(-4, 5), GaussRat::ratio(3, 5)],
        ];
        assert_eq!(q.substitute_linear(&m).unwrap(), q);
        let id = vec![vec![c(1), c(0)], vec![c(0), c(1)]];
        let p = (&x + &y).pow(3) + x.clone();
        assert_eq!(p.substitute_linear(&id).unwrap(), p);
        assert!(p.substitute_linear(&[vec![c(1)]]).is_err());
    }

    #[test]
    fn rotation_one_ps_diagonalizes_x_plus_iy() {
        let t = LaurentPoly::var(1, 0);
        let tinv = LaurentPoly::monomial(1, &[-1], GaussRat::one());
        let a = (&t + &tinv).scale(&GaussRat::ratio(1, 2));
        let b = (&t - &tinv).scale(&GaussRat::gaussian_int(0, 2).inv().unwrap());
        let lambda = vec![vec![a.clone(), b.clone()], vec![-&b, a]];
        let (x, y) = x2();
        let p = &x + &y.scale(&GaussRat::i());
        let got = p.substitute_linear_laurent(&lambda).unwrap();
        let expected =
            LaurentPoly::from_terms(3, [(vec![-1, 1, 0], c(1)), (vec![-1, 0, 1], GaussRat::i())])
                .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn constant_term_examples() {
        let z = LaurentPoly::var(1, 0);
        let zi = LaurentPoly::monomial(1, &[-1], GaussRat::one());
        let s = &z + &zi;
        assert_eq!(s.constant_term(), c(0));
        assert_eq!(s.pow(2).constant_term(), c(2));
        assert_eq!(LaurentPoly::constant(1, c(5)).constant_term(), c(5));
    }

    #[test]
    fn evaluate_and_laurent_views() {
        let (x, y) = x2();
        let p = &x * &y + x.scale(&c(2));
        assert_eq!(p.evaluate(&[c(3), c(4)]).unwrap(), c(18));
        assert_eq!(p.to_laurent().to_poly().unwrap(), p);
        let zi = LaurentPoly::monomial(1, &[-1], GaussRat::one());
        assert!(zi.to_poly().is_none());
        assert_eq!(
            zi.try_pow_signed(-2).unwrap(),
            LaurentPoly::monomial(1, &[2], c(1))
        );
    }
}
