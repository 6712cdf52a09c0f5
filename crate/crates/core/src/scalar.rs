//! Exact scalars: Gaussian rationals `a + b·i` and the π-extension used by the
//! half-disk functional.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An element of ℚ(i). Both parts are kept in lowest terms with positive
/// denominators (an invariant inherited from [`BigRational`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    re: BigRational,
    im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        GaussRat {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::from_real(BigRational::from_integer(n.into()))
    }

    /// `num/den` as a real scalar. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_real(BigRational::new(num.into(), den.into()))
    }

    pub fn gaussian_int(re: i64, im: i64) -> Self {
        GaussRat {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    pub fn i() -> Self {
        Self::gaussian_int(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True when both parts are integers.
    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        (self.is_real() && self.re.is_integer()).then(|| self.re.to_integer())
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(GaussRat {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        GaussRat {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GaussRat::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Floating-point approximation, for numerical sanity checks only.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl From<i64> for GaussRat {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigInt> for GaussRat {
    fn from(n: BigInt) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for GaussRat {
    fn from(q: BigRational) -> Self {
        Self::from_real(q)
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        if self.is_real() && o.is_real() {
            return GaussRat::from_real(&self.re * &o.re);
        }
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, o: GaussRat) -> GaussRat {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, o: &GaussRat) -> GaussRat {
                (&self).$m(o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, o: &GaussRat) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussRat> for GaussRat {
    fn sub_assign(&mut self, o: &GaussRat) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&GaussRat> for GaussRat {
    fn mul_assign(&mut self, o: &GaussRat) {
        *self = &*self * o;
    }
}

impl Sum for GaussRat {
    fn sum<I: Iterator<Item = GaussRat>>(iter: I) -> Self {
        iter.fold(GaussRat::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl Product for GaussRat {
    fn product<I: Iterator<Item = GaussRat>>(iter: I) -> Self {
        iter.fold(GaussRat::one(), |acc, x| &acc * &x)
    }
}

/// Writes `|q|` without sign, omitting the denominator when it is 1.
fn write_abs(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    let a = q.abs();
    if a.is_integer() {
        write!(f, "{}", a.numer())
    } else {
        write!(f, "{}/{}", a.numer(), a.denom())
    }
}

fn write_imag_abs(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.abs().is_one() {
        f.write_str("i")
    } else {
        write_abs(f, q)?;
        f.write_str("*i")
    }
}

/// Exact textual form: `a/b`, `c/d*i` or `a/b+c/d*i` (denominators of 1 are
/// omitted). The output parses back with the polynomial grammar.
impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => {
                if self.re.is_negative() {
                    f.write_str("-")?;
                }
                write_abs(f, &self.re)
            }
            (true, false) => {
                if self.im.is_negative() {
                    f.write_str("-")?;
                }
                write_imag_abs(f, &self.im)
            }
            (false, false) => {
                if self.re.is_negative() {
                    f.write_str("-")?;
                }
                write_abs(f, &self.re)?;
                f.write_str(if self.im.is_negative() { "-" } else { "+" })?;
                write_imag_abs(f, &self.im)
            }
        }
    }
}

/// `rat + pi·π` with both parts in ℚ(i). Since 1 and π are linearly
/// independent over ℚ(i), the value is zero iff both parts are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PiScalar {
    pub rat: GaussRat,
    pub pi: GaussRat,
}

impl PiScalar {
    pub fn new(rat: GaussRat, pi: GaussRat) -> Self {
        PiScalar { rat, pi }
    }

    pub fn rational(rat: GaussRat) -> Self {
        PiScalar {
            rat,
            pi: GaussRat::zero(),
        }
    }

    pub fn pi_multiple(pi: GaussRat) -> Self {
        PiScalar {
            rat: GaussRat::zero(),
            pi,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.pi.is_zero()
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        PiScalar {
            rat: &self.rat * c,
            pi: &self.pi * c,
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        let (a, b) = self.rat.to_f64_pair();
        let (c, d) = self.pi.to_f64_pair();
        (a + c * std::f64::consts::PI, b + d * std::f64::consts::PI)
    }
}

impl<'a> Add<&'a PiScalar> for &'a PiScalar {
    type Output = PiScalar;
    fn add(self, o: &PiScalar) -> PiScalar {
        PiScalar {
            rat: &self.rat + &o.rat,
            pi: &self.pi + &o.pi,
        }
    }
}

impl AddAssign<&PiScalar> for PiScalar {
    fn add_assign(&mut self, o: &PiScalar) {
        self.rat += &o.rat;
        self.pi += &o.pi;
    }
}

/// `a`, `(b)*pi`, or `a + (b)*pi`.
impl fmt::Display for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pi.is_zero() {
            write!(f, "{}", self.rat)
        } else if self.rat.is_zero() {
            write!(f, "({})*pi", self.pi)
        } else {
            write!(f, "{} + ({})*pi", self.rat, self.pi)
        }
    }
}

/// The value of a functional: a Gaussian rational, or an element of
/// ℚ(i) ⊕ ℚ(i)π for the half-disk integral.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExactValue {
    Scalar(GaussRat),
    Pi(PiScalar),
}

impl ExactValue {
    pub fn is_zero(&self) -> bool {
        match self {
            ExactValue::Scalar(c) => c.is_zero(),
            ExactValue::Pi(p) => p.is_zero(),
        }
    }

    pub fn as_scalar(&self) -> Option<&GaussRat> {
        match self {
            ExactValue::Scalar(c) => Some(c),
            ExactValue::Pi(_) => None,
        }
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Scalar(c) => c.fmt(f),
            ExactValue::Pi(p) => p.fmt(f),
        }
    }
}
