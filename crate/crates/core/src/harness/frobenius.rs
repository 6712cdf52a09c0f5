//! Nonvanishing certificates from the congruence `E[F(X)^p] ≡ F(0) (mod p)`.
//!
//! For `F ∈ ℤ[x]` and an odd prime `p`, `F^p ≡ Σ c^p x^{pβ}` modulo `p`, and
//! the Gaussian moment of `x^{pβ}` with `β ≠ 0` even contains the factor `p`.
//! Hence `E[F^p] ≡ F(0)`, and `p ∤ F(0)` certifies `E[F^p] ≠ 0`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::functionals::gaussian_expectation_of_product;
use crate::poly::{check_degree, MPoly};
use crate::scalar::GaussRat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertStatus {
    /// Congruence holds and `p ∤ F(0)`: `E[F^p] ≠ 0`.
    Certified,
    /// `p | F(0)`: the congruence says nothing about vanishing.
    Inconclusive,
    /// The congruence failed. Never expected; reported as a finding.
    CongruenceFailed,
}

impl fmt::Display for CertStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertStatus::Certified => "certified nonvanishing",
            CertStatus::Inconclusive => "inconclusive",
            CertStatus::CongruenceFailed => "congruence failed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertResult {
    pub prime: u64,
    /// `E[F^p] mod p`, in `[0, p)`.
    pub residue: BigInt,
    /// `F(0) mod p`, in `[0, p)`.
    pub expected: BigInt,
    pub valid: bool,
    pub exact_value: GaussRat,
    pub status: CertStatus,
}

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn check_integer_coefficients(f: &MPoly) -> Result<()> {
    for (_, c) in f.terms() {
        if c.as_integer().is_none() {
            return Err(Error::NonIntegerCoefficient(c.to_string()));
        }
    }
    Ok(())
}

pub fn frobenius_certificate(f: &MPoly, p: u64) -> Result<CertResult> {
    check_integer_coefficients(f)?;
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    // E[F^p] = E[F^h · F^{h+1}] with p = 2h + 1; the full power is never
    // materialized.
    let h = u32::try_from(p / 2).map_err(|_| Error::NotOddPrime(p))?;
    check_degree(f.abs_degree().saturating_mul(p))?;
    let low = f.try_pow(h)?;
    let high = low.try_mul(f)?;
    let exact_value = gaussian_expectation_of_product(&low, &high)?;
    let value = exact_value
        .as_integer()
        .expect("Gaussian moments of integer polynomials are integers");
    let modulus = BigInt::from(p);
    let residue = value.mod_floor(&modulus);
    let expected = f
        .constant_term()
        .as_integer()
        .expect("checked above")
        .mod_floor(&modulus);
    let valid = residue == expected;
    let status = if expected.is_zero() {
        CertStatus::Inconclusive
    } else if valid {
        CertStatus::Certified
    } else {
        CertStatus::CongruenceFailed
    };
    Ok(CertResult {
        prime: p,
        residue,
        expected,
        valid,
        exact_value,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parser::parse_mpoly;

    #[test]
    fn one_minus_x_squared_at_five() {
        let f = parse_mpoly("1 - x^2", &["x"]).unwrap();
        let r = frobenius_certificate(&f, 5).unwrap();
        assert_eq!(r.exact_value, GaussRat::from_int(-544));
        assert_eq!(r.residue, BigInt::from(1));
        assert_eq!(r.expected, BigInt::from(1));
        assert!(r.valid);
        assert_eq!(r.status, CertStatus::Certified);
    }

    #[test]
    fn zero_constant_term_is_inconclusive() {
        let f = parse_mpoly("x", &["x"]).unwrap();
        let r = frobenius_certificate(&f, 3).unwrap();
        assert_eq!(r.status, CertStatus::Inconclusive);
        assert!(r.valid);
    }

    #[test]
    fn two_variables_at_three() {
        let f = parse_mpoly("1 - x^2 - y^2", &["x", "y"]).unwrap();
        let r = frobenius_certificate(&f, 3).unwrap();
        assert_eq!(r.exact_value, GaussRat::from_int(-29));
        assert_eq!(r.status, CertStatus::Certified);
    }

    #[test]
    fn usage_errors() {
        let f = parse_mpoly("1/2 - x", &["x"]).unwrap();
        assert!(matches!(
            frobenius_certificate(&f, 3),
            Err(Error::NonIntegerCoefficient(_))
        ));
        let g = parse_mpoly("1 + i*x", &["x"]).unwrap();
        assert!(frobenius_certificate(&g, 3).is_err());
        let h = parse_mpoly("1 - x", &["x"]).unwrap();
        for p in [0, 1, 2, 9, 15] {
            assert_eq!(frobenius_certificate(&h, p), Err(Error::NotOddPrime(p)));
        }
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&p| is_odd_prime(p)).collect();
        assert_eq!(primes, [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }
}
