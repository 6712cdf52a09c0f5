//! One-parameter subgroups `λ: ℂ* → O_n(ℂ)` given as Laurent-polynomial
//! matrices, and the degeneration test `P(λ(t)x) ∈ t·ℂ[t][x]`.

use crate::error::{Error, Result};
use crate::io::format::format_poly;
use crate::poly::{LaurentPoly, MPoly};
use crate::scalar::GaussRat;

/// A square matrix of univariate Laurent polynomials in `t` satisfying
/// `λ(t)·λ(t)ᵀ = I`. The identity is verified on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePs {
    matrix: Vec<Vec<LaurentPoly>>,
}

impl OnePs {
    pub fn new(matrix: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::Invalid(
                "a one-parameter subgroup needs n >= 1".into(),
            ));
        }
        for row in &matrix {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if let Some(bad) = row.iter().find(|e| e.arity() != 1) {
                return Err(Error::ArityMismatch {
                    left: 1,
                    right: bad.arity(),
                });
            }
        }
        for r in 0..n {
            for c in 0..n {
                let mut entry = LaurentPoly::zero(1);
                for (a, b) in matrix[r].iter().zip(&matrix[c]) {
                    entry = &entry + &(a * b);
                }
                if r == c {
                    entry = &entry - &LaurentPoly::one(1);
                }
                if !entry.is_zero() {
                    return Err(Error::NotOrthogonal {
                        row: r,
                        col: c,
                        value: format_poly(&entry, &["t".to_string()]),
                    });
                }
            }
        }
        Ok(OnePs { matrix })
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        if r == c {
                            LaurentPoly::one(1)
                        } else {
                            LaurentPoly::zero(1)
                        }
                    })
                    .collect()
            })
            .collect();
        OnePs { matrix }
    }

    /// The rotation subgroup of `O_2`: rows `(a, b), (−b, a)` with
    /// `a = (t + t⁻¹)/2`, `b = (t − t⁻¹)/(2i)`. It scales `x + iy` by `t⁻¹`
    /// and `x − iy` by `t`.
    pub fn rotation() -> Self {
        let t = LaurentPoly::var(1, 0);
        let tinv = LaurentPoly::monomial(1, &[-1], GaussRat::from_int(1));
        let a = (&t + &tinv).scale(&GaussRat::ratio(1, 2));
        let b = (&t - &tinv).scale(&-(GaussRat::i() * GaussRat::ratio(1, 2)));
        OnePs {
            matrix: vec![vec![a.clone(), b.clone()], vec![-&b, a]],
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<LaurentPoly>] {
        &self.matrix
    }

    /// `λ(t⁻¹)`, again a one-parameter subgroup.
    pub fn inverse_parameter(&self) -> OnePs {
        OnePs {
            matrix: self
                .matrix
                .iter()
                .map(|row| row.iter().map(|e| e.invert_variables(&[0])).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePsReport {
    /// `P(λ(t)x)` with `t` as variable 0.
    pub substituted: LaurentPoly,
    /// Least power of `t`; `None` when `P(λ(t)x) = 0`.
    pub min_t_exponent: Option<i32>,
    pub member: bool,
    /// Least power of `t` in `P(λ(t⁻¹)x)`.
    pub inverse_min_t_exponent: Option<i32>,
    pub inverse_member: bool,
}

pub fn one_ps_check(p: &MPoly, lambda: &OnePs) -> Result<OnePsReport> {
    if p.arity() != lambda.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.arity(),
            got: lambda.dim(),
        });
    }
    let substituted = p.substitute_linear_laurent(lambda.matrix())?;
    let min_t_exponent = substituted.min_exponent(0);
    let inverse_min_t_exponent = substituted.max_exponent(0).map(|e| -e);
    Ok(OnePsReport {
        member: min_t_exponent.is_none_or(|e| e >= 1),
        inverse_member: inverse_min_t_exponent.is_none_or(|e| e >= 1),
        substituted,
        min_t_exponent,
        inverse_min_t_exponent,
    })
}
