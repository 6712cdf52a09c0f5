//! The exact linear functionals: Gaussian expectation, the Hermite pairing
//! and its differential-operator form, the half-disk integral, and the
//! normalized torus integral (constant term).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::combinat::{double_factorial, factorial};
use crate::error::{Error, Result};
use crate::poly::{AnyPoly, LaurentPoly, MPoly};
use crate::scalar::{ExactValue, GaussRat, PiScalar};

/// `E[x^α]` for i.i.d. standard Gaussians: `∏ (α_i − 1)!!` when every
/// exponent is even, `None` (zero) otherwise.
pub fn gaussian_moment(exps: &[u32]) -> Option<BigInt> {
    if exps.iter().any(|e| e % 2 == 1) {
        return None;
    }
    Some(
        exps.iter()
            .filter(|&&e| e > 0)
            .map(|&e| double_factorial(e as i64 - 1))
            .product(),
    )
}

/// `E[P(X)]` for `X` a vector of i.i.d. standard normal variables.
pub fn gaussian_expectation(p: &MPoly) -> GaussRat {
    p.terms()
        .filter_map(|(m, c)| gaussian_moment(m).map(|w| c.scale_int(&w)))
        .sum()
}

/// `E[A(X)·B(X)]` without forming the product. Only pairs of terms whose
/// exponents agree in parity can contribute, so `B` is bucketed by parity
/// class and each term of `A` meets just its own bucket.
pub fn gaussian_expectation_of_product(a: &MPoly, b: &MPoly) -> Result<GaussRat> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch {
            left: a.arity(),
            right: b.arity(),
        });
    }
    let parity = |m: &[u32]| -> Vec<bool> { m.iter().map(|e| e % 2 == 1).collect() };
    let (da, ta) = a.integer_terms();
    let (db, tb) = b.integer_terms();
    let mut buckets: HashMap<Vec<bool>, Vec<_>> = HashMap::new();
    for (m, re, im) in &tb {
        buckets.entry(parity(m)).or_default().push((&m[..], re, im));
    }
    let (mut total_re, mut total_im) = (BigInt::zero(), BigInt::zero());
    let mut exps = vec![0u32; a.arity()];
    for (ma, ar, ai) in &ta {
        let Some(bucket) = buckets.get(&parity(ma)) else {
            continue;
        };
        let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
        for (mb, br, bi) in bucket {
            for (k, e) in exps.iter_mut().enumerate() {
                *e = ma[k] + mb[k];
            }
            let w = gaussian_moment(&exps).expect("matching parities give even exponents");
            if !br.is_zero() {
                re += *br * &w;
            }
            if !bi.is_zero() {
                im += *bi * &w;
            }
        }
        total_re += ar * &re - ai * &im;
        total_im += ar * &im + ai * &re;
    }
    let den = da * db;
    Ok(GaussRat::new(
        BigRational::new(total_re, den.clone()),
        BigRational::new(total_im, den),
    ))
}

fn split_arity(p: &MPoly, functional: &'static str) -> Result<usize> {
    let a = p.arity();
    if a == 0 || a % 2 == 1 {
        return Err(Error::Incompatible {
            functional,
            reason: format!("needs an even number of variables (w, z), got {a}"),
        });
    }
    Ok(a / 2)
}

/// `E_n`: maps `w^α z^β` to `∂^α z^β`, returning a polynomial in the `n`
/// trailing `z` variables. The first half of the variables is `w`.
pub fn apply_en(p: &MPoly) -> Result<MPoly> {
    let n = split_arity(p, "E_n")?;
    let mut terms = Vec::new();
    'term: for (m, c) in p.terms() {
        let (w, z) = m.split_at(n);
        let mut coeff = c.clone();
        let mut exps = Vec::with_capacity(n);
        for (&a, &b) in w.iter().zip(z) {
            if a > b {
                continue 'term;
            }
            // b! / (b - a)!
            let falling = factorial(b as usize) / factorial((b - a) as usize);
            coeff = coeff.scale_int(&falling);
            exps.push(b - a);
        }
        terms.push((exps, coeff));
    }
    MPoly::from_terms(n, terms)
}

/// `F_n(P) = E_n(P)|_{z=0}`, computed monomial by monomial:
/// `w^α z^β ↦ α!` if `α = β`, else 0.
pub fn hermite_pairing(p: &MPoly) -> Result<GaussRat> {
    let n = split_arity(p, "hermite_pairing")?;
    Ok(p.terms()
        .filter_map(|(m, c)| {
            let (w, z) = m.split_at(n);
            (w == z).then(|| {
                let f: BigInt = w.iter().map(|&a| factorial(a as usize)).product();
                c.scale_int(&f)
            })
        })
        .sum())
}

/// The same value as [`hermite_pairing`], through the differential operator:
/// apply `E_n` and evaluate at `z = 0`.
pub fn hermite_pairing_via_en(p: &MPoly) -> Result<GaussRat> {
    Ok(apply_en(p)?.constant_term())
}

/// `∏_j (x_j − i·y_j)^{α_j} (x_j + i·y_j)^{β_j}` in the variables
/// `(x_1..x_n, y_1..y_n)`: the unnormalized `W^α Z^β`.
pub fn wz_polynomial(alpha: &[u32], beta: &[u32]) -> Result<MPoly> {
    if alpha.len() != beta.len() {
        return Err(Error::DimensionMismatch {
            expected: alpha.len(),
            got: beta.len(),
        });
    }
    let n = alpha.len();
    let mut acc = MPoly::one(2 * n);
    for j in 0..n {
        let x = MPoly::var(2 * n, j);
        let iy = MPoly::var(2 * n, n + j).scale(&GaussRat::i());
        let w = &x - &iy;
        let z = &x + &iy;
        acc = acc.try_mul(&w.try_pow(alpha[j])?)?;
        acc = acc.try_mul(&z.try_pow(beta[j])?)?;
    }
    Ok(acc)
}

/// `E[∏ (X_j − iY_j)^{α_j} (X_j + iY_j)^{β_j}]`, which equals
/// `2^{(|α|+|β|)/2} · F_n(w^α z^β)` since the `√2` normalization of `W, Z`
/// is left out.
pub fn wz_expectation(alpha: &[u32], beta: &[u32]) -> Result<GaussRat> {
    Ok(gaussian_expectation(&wz_polynomial(alpha, beta)?))
}

fn halfdisk_cache() -> &'static RwLock<HashMap<(u32, u32), PiScalar>> {
    static C: OnceLock<RwLock<HashMap<(u32, u32), PiScalar>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// `∫_B x^a y^b dx dy` over `B = {y ≥ 0, x² + y² ≤ 1}`.
///
/// In polar form this is `I(a, b) / (a + b + 2)` with
/// `I(a, b) = ∫_0^π cos^a θ sin^b θ dθ`, which vanishes for odd `a` and
/// otherwise equals `c · (a−1)!!(b−1)!!/(a+b)!!` where `c = π` if `b` is
/// even and `c = 2` if `b` is odd.
pub fn halfdisk_monomial(a: u32, b: u32) -> PiScalar {
    if let Some(v) = halfdisk_cache().read().unwrap().get(&(a, b)) {
        return v.clone();
    }
    let value = if a % 2 == 1 {
        PiScalar::default()
    } else {
        let num = double_factorial(a as i64 - 1) * double_factorial(b as i64 - 1);
        let den = double_factorial((a + b) as i64) * BigInt::from(a + b + 2);
        let q = GaussRat::from_real(BigRational::new(num, den));
        if b.is_multiple_of(2) {
            PiScalar::pi_multiple(q)
        } else {
            PiScalar::rational(q.scale_int(&BigInt::from(2)))
        }
    };
    halfdisk_cache()
        .write()
        .unwrap()
        .insert((a, b), value.clone());
    value
}

/// Exact Lebesgue integral of `P(x, y)` over the upper half of the unit disk.
pub fn halfdisk_integral(p: &MPoly) -> Result<PiScalar> {
    if p.arity() != 2 {
        return Err(Error::Incompatible {
            functional: "halfdisk",
            reason: format!("needs exactly 2 variables, got {}", p.arity()),
        });
    }
    let mut acc = PiScalar::default();
    for (m, c) in p.terms() {
        if m[0] % 2 == 1 {
            continue;
        }
        acc += &halfdisk_monomial(m[0], m[1]).scale(c);
    }
    Ok(acc)
}

/// Normalized Haar integral over the compact torus of a Laurent polynomial in
/// `z_k = e^{iθ_k}`: its constant term.
pub fn torus_ct(f: &LaurentPoly) -> GaussRat {
    f.constant_term()
}

/// Which functional a scan or probe evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctionalKind {
    Gaussian,
    HermitePairing,
    HalfDisk,
    TorusCt,
}

impl FunctionalKind {
    pub const ALL: [FunctionalKind; 4] = [
        FunctionalKind::Gaussian,
        FunctionalKind::HermitePairing,
        FunctionalKind::HalfDisk,
        FunctionalKind::TorusCt,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FunctionalKind::Gaussian => "gaussian",
            FunctionalKind::HermitePairing => "hermite_pairing",
            FunctionalKind::HalfDisk => "halfdisk",
            FunctionalKind::TorusCt => "torus_ct",
        }
    }

    /// Brings `p` into the ring this functional acts on, or explains why it
    /// cannot be applied. Arity is preserved by products and powers, so one
    /// check covers every `P^m`.
    pub fn prepare(self, p: &AnyPoly) -> Result<AnyPoly> {
        let incompatible = |reason: String| Error::Incompatible {
            functional: self.tag(),
            reason,
        };
        match self {
            FunctionalKind::TorusCt => Ok(AnyPoly::Laurent(p.as_laurent())),
            _ => {
                let q = p.as_poly().ok_or_else(|| {
                    incompatible("negative exponents are only allowed for torus_ct".into())
                })?;
                let a = q.arity();
                match self {
                    FunctionalKind::HermitePairing if a == 0 || a % 2 == 1 => Err(incompatible(
                        format!("needs an even number of variables (w, z), got {a}"),
                    )),
                    FunctionalKind::HalfDisk if a != 2 => {
                        Err(incompatible(format!("needs exactly 2 variables, got {a}")))
                    }
                    _ => Ok(AnyPoly::Poly(q)),
                }
            }
        }
    }

    pub fn apply(self, p: &AnyPoly) -> Result<ExactValue> {
        let p = match self.prepare(p)? {
            AnyPoly::Poly(p) => p,
            AnyPoly::Laurent(f) => return Ok(ExactValue::Scalar(torus_ct(&f))),
        };
        Ok(match self {
            FunctionalKind::Gaussian => ExactValue::Scalar(gaussian_expectation(&p)),
            FunctionalKind::HermitePairing => ExactValue::Scalar(hermite_pairing(&p)?),
            FunctionalKind::HalfDisk => ExactValue::Pi(halfdisk_integral(&p)?),
            FunctionalKind::TorusCt => unreachable!("prepared as Laurent"),
        })
    }

    /// The value of the functional on the constant polynomial 1.
    pub fn of_one(self, arity: usize) -> Result<ExactValue> {
        self.apply(&AnyPoly::Poly(MPoly::one(arity)))
    }
}

impl fmt::Display for FunctionalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FunctionalKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gaussian" => Ok(FunctionalKind::Gaussian),
            "hermite_pairing" | "hermite" | "pairing" => Ok(FunctionalKind::HermitePairing),
            "halfdisk" => Ok(FunctionalKind::HalfDisk),
            "torus_ct" | "torus" => Ok(FunctionalKind::TorusCt),
            other => Err(Error::Invalid(format!(
                "unknown functional `{other}` (expected gaussian, hermite_pairing, halfdisk, torus_ct)"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn x1() -> MPoly {
        MPoly::var(1, 0)
    }

    #[test]
    fn gaussian_examples() {
        let x = x1();
        assert_eq!(gaussian_expectation(&x.pow(4)), c(3));
        let xy = MPoly::var(2, 0) * MPoly::var(2, 1);
        assert_eq!(gaussian_expectation(&xy), c(0));
        let p = (&x * &x - MPoly::one(1)).pow(2);
        assert_eq!(gaussian_expectation(&p), c(2));
        let m = MPoly::monomial(2, &[4, 2], c(1));
        assert_eq!(gaussian_expectation(&m), c(3));
        assert_eq!(gaussian_expectation(&MPoly::one(3)), c(1));
    }

    #[test]
    fn expectation_of_product_matches_expanded_product() {
        let a = crate::io::parse_mpoly("1 - x^2 + 3*x*y - i*y^3 + 2", &["x", "y"]).unwrap();
        let b = crate::io::parse_mpoly("(x + y - 1)^3 + 1/2*x*y^2", &["x", "y"]).unwrap();
        assert_eq!(
            gaussian_expectation_of_product(&a, &b).unwrap(),
            gaussian_expectation(&(&a * &b))
        );
        assert!(gaussian_expectation_of_product(&a, &x1()).is_err());
    }

    #[test]
    fn en_examples() {
        let w2z3 = MPoly::monomial(2, &[2, 3], c(1));
        assert_eq!(apply_en(&w2z3).unwrap(), MPoly::monomial(1, &[1], c(6)));
        let z2 = MPoly::monomial(2, &[0, 2], c(1));
        assert_eq!(apply_en(&z2).unwrap(), MPoly::monomial(1, &[2], c(1)));
        let wz = MPoly::monomial(2, &[1, 1], c(1));
        assert_eq!(apply_en(&wz).unwrap(), MPoly::one(1));
        assert!(apply_en(&MPoly::var(3, 0)).is_err());
    }

    #[test]
    fn pairing_table() {
        assert_eq!(
            hermite_pairing(&MPoly::monomial(2, &[2, 2], c(1))).unwrap(),
            c(2)
        );
        assert_eq!(
            hermite_pairing(&MPoly::monomial(4, &[1, 0, 0, 1], c(1))).unwrap(),
            c(0)
        );
        assert_eq!(
            hermite_pairing(&MPoly::monomial(2, &[3, 3], c(1))).unwrap(),
            c(6)
        );
    }

    #[test]
    fn wz_examples() {
        assert_eq!(wz_expectation(&[1], &[1]).unwrap(), c(2));
        assert_eq!(wz_expectation(&[2], &[0]).unwrap(), c(0));
        assert_eq!(wz_expectation(&[2], &[2]).unwrap(), c(8));
        assert!(wz_expectation(&[1], &[1, 0]).is_err());
    }

    #[test]
    fn halfdisk_examples() {
        assert_eq!(
            halfdisk_integral(&MPoly::one(2)).unwrap(),
            PiScalar::pi_multiple(GaussRat::ratio(1, 2))
        );
        let y = MPoly::var(2, 1);
        assert_eq!(
            halfdisk_integral(&y).unwrap(),
            PiScalar::rational(GaussRat::ratio(2, 3))
        );
        let z = MPoly::var(2, 0) + y.scale(&GaussRat::i());
        for m in 1..6u32 {
            assert!(halfdisk_integral(&z.pow(2 * m)).unwrap().is_zero());
            let expected = GaussRat::new(
                BigRational::zero(),
                BigRational::new(2.into(), ((2 * m + 3) * (2 * m + 1)).into()),
            );
            assert_eq!(
                halfdisk_integral(&z.pow(2 * m + 1)).unwrap(),
                PiScalar::rational(expected)
            );
        }
        assert!(halfdisk_integral(&x1()).is_err());
    }

    #[test]
    fn torus_examples() {
        let z2 = LaurentPoly::monomial(1, &[2], c(1));
        assert_eq!(torus_ct(&z2), c(0));
        let zm2 = LaurentPoly::monomial(1, &[-2], c(1));
        let f = (&z2 - &zm2).pow(2).scale(&GaussRat::ratio(-1, 16));
        assert_eq!(torus_ct(&f), GaussRat::ratio(1, 8));
        assert_eq!(torus_ct(&LaurentPoly::one(1)), c(1));
    }

    #[test]
    fn functional_compatibility() {
        let lp = AnyPoly::Laurent(LaurentPoly::monomial(1, &[-1], c(1)));
        assert!(FunctionalKind::Gaussian.apply(&lp).is_err());
        assert!(FunctionalKind::TorusCt.apply(&lp).unwrap().is_zero());
        let p3 = AnyPoly::Poly(MPoly::one(3));
        assert!(FunctionalKind::HalfDisk.apply(&p3).is_err());
        assert!(FunctionalKind::HermitePairing.apply(&p3).is_err());
        let nonneg = AnyPoly::Laurent(LaurentPoly::monomial(1, &[2], c(1)));
        assert_eq!(
            FunctionalKind::Gaussian.apply(&nonneg).unwrap(),
            ExactValue::Scalar(c(1))
        );
        for k in FunctionalKind::ALL {
            assert_eq!(k.tag().parse::<FunctionalKind>().unwrap(), k);
        }
    }
}
