//! Reduction of a doubly homogeneous polynomial to a Laurent polynomial on
//! the torus, and the exact comparison of Gaussian moments with torus
//! constant terms.
//!
//! Writing `x_k = r_k cos θ_k`, `y_k = r_k sin θ_k` and `z_k = e^{iθ_k}`, a
//! polynomial homogeneous of degree `d_k` in each pair `(x_k, y_k)` factors as
//! `P = (∏ r_k^{d_k}) F_L(z)`. For standard Gaussians the radius and angle are
//! independent and `E[r^{2j}] = 2^j j!`, so
//! `E[P^m] = (∏_k E[r_k^{m d_k}]) · CT(F_L^m)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::functionals::{gaussian_expectation, torus_ct};
use crate::poly::{LaurentPoly, MPoly};
use crate::scalar::GaussRat;

/// Pairs `(x_k, y_k)` of variable indices.
pub type Pairing = Vec<(usize, usize)>;

/// `(x_k, y_k) = (k, n + k)`, matching the variable order `x1..xn, y1..yn`.
pub fn default_pairing(arity: usize) -> Result<Pairing> {
    if arity == 0 || arity % 2 == 1 {
        return Err(Error::Invalid(format!(
            "a pairing needs an even number of variables, got {arity}"
        )));
    }
    let n = arity / 2;
    Ok((0..n).map(|k| (k, n + k)).collect())
}

fn check_pairing(arity: usize, pairing: &[(usize, usize)]) -> Result<()> {
    let mut seen = vec![false; arity];
    for &(x, y) in pairing {
        for v in [x, y] {
            if v >= arity || seen[v] {
                return Err(Error::Invalid(format!(
                    "pairing must use each of the {arity} variables exactly once"
                )));
            }
            seen[v] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Invalid(format!(
            "pairing must use each of the {arity} variables exactly once"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleHomogReduction {
    pub pairing: Pairing,
    /// Degree of `P` in each pair.
    pub degrees: Vec<u32>,
    /// `F_L(z_1, …, z_n)`, the angular part.
    pub angular: LaurentPoly,
}

impl DoubleHomogReduction {
    /// `A_m = ∏_k 2^{m d_k / 2} (m d_k / 2)!`, defined when every `m d_k` is
    /// even. For odd `m d_k` the radial moment involves `√(π/2)` and is not
    /// in ℚ(i).
    pub fn scale(&self, m: u32) -> Option<BigInt> {
        let mut acc = BigInt::one();
        for &d in &self.degrees {
            let md = m as u64 * d as u64;
            if md % 2 == 1 {
                return None;
            }
            let j = (md / 2) as usize;
            acc *= (BigInt::one() << j) * factorial(j);
        }
        Some(acc)
    }
}

pub fn double_homog_reduce(p: &MPoly, pairing: &[(usize, usize)]) -> Result<DoubleHomogReduction> {
    check_pairing(p.arity(), pairing)?;
    let n = pairing.len();
    let mut degrees: Option<Vec<u32>> = None;
    for (m, _) in p.terms() {
        let d: Vec<u32> = pairing.iter().map(|&(x, y)| m[x] + m[y]).collect();
        match &degrees {
            None => degrees = Some(d),
            Some(prev) => {
                if let Some(k) = (0..n).find(|&k| prev[k] != d[k]) {
                    let (x, y) = pairing[k];
                    return Err(Error::NotDoublyHomogeneous { pair: k, x, y });
                }
            }
        }
    }
    let degrees = degrees.unwrap_or_else(|| vec![0; n]);

    // cos θ = (z + z^{-1})/2, sin θ = (z - z^{-1})/(2i)
    let half = GaussRat::ratio(1, 2);
    let minus_half_i = -(GaussRat::i() * &half);
    let mut images = vec![LaurentPoly::zero(n); p.arity()];
    for (k, &(x, y)) in pairing.iter().enumerate() {
        let z = LaurentPoly::var(n, k);
        let mut e = vec![0i32; n];
        e[k] = -1;
        let zinv = LaurentPoly::monomial(n, &e, GaussRat::one());
        images[x] = (&z + &zinv).scale(&half);
        images[y] = (&z - &zinv).scale(&minus_half_i);
    }
    let angular = p.compose(&images)?;
    Ok(DoubleHomogReduction {
        pairing: pairing.to_vec(),
        degrees,
        angular,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckRow {
    pub m: u32,
    pub gaussian: GaussRat,
    pub torus: GaussRat,
    pub scale: Option<BigInt>,
    pub vanishing_agrees: bool,
    /// `E[P^m] = A_m · CT(F_L^m)`, checked only when `A_m` is rational.
    pub ratio_holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub reduction: DoubleHomogReduction,
    pub rows: Vec<CrosscheckRow>,
    pub holds: bool,
}

pub fn gaussian_torus_crosscheck(
    p: &MPoly,
    pairing: &[(usize, usize)],
    bound: u32,
) -> Result<CrosscheckReport> {
    if bound == 0 {
        return Err(Error::Invalid(
            "the window bound M must be at least 1".into(),
        ));
    }
    let reduction = double_homog_reduce(p, pairing)?;
    let mut rows = Vec::with_capacity(bound as usize);
    let mut pm = p.clone();
    let mut fm = reduction.angular.clone();
    for m in 1..=bound {
        if m > 1 {
            pm = pm.try_mul(p)?;
            fm = fm.try_mul(&reduction.angular)?;
        }
        let gaussian = gaussian_expectation(&pm);
        let torus = torus_ct(&fm);
        let scale = reduction.scale(m);
        let ratio_holds = scale.as_ref().map(|a| gaussian == torus.scale_int(a));
        rows.push(CrosscheckRow {
            m,
            vanishing_agrees: gaussian.is_zero() == torus.is_zero(),
            gaussian,
            torus,
            scale,
            ratio_holds,
        });
    }
    let holds = rows
        .iter()
        .all(|r| r.vanishing_agrees && r.ratio_holds != Some(false));
    Ok(CrosscheckReport {
        reduction,
        rows,
        holds,
    })
}
