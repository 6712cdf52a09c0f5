//! Vanishing scans `L(P^m)` and Mathieu–Zhao probes `L(P^m Q)` over a
//! finite window `m = 1..M`.
//!
//! "For all large m" cannot be decided by finite computation, so every
//! conclusion here is a statement about the window only.

use crate::error::{Error, Result};
use crate::functionals::FunctionalKind;
use crate::poly::{degree_cap, AnyPoly};
use crate::scalar::ExactValue;

pub const DEFAULT_WINDOW: u32 = 32;

/// `L(P^m)` for `m = 1..=bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingProfile {
    pub functional: FunctionalKind,
    pub poly: AnyPoly,
    pub bound: u32,
    /// `values[k]` holds `L(P^{k+1})`.
    pub values: Vec<ExactValue>,
    pub first_nonzero: Option<u32>,
    pub all_zero: bool,
}

impl VanishingProfile {
    /// `L(P^m)` for `1 <= m <= bound`.
    pub fn value(&self, m: u32) -> &ExactValue {
        &self.values[(m - 1) as usize]
    }
}

fn check_window(p: &AnyPoly, extra_degree: u64, bound: u32) -> Result<()> {
    if bound == 0 {
        return Err(Error::Invalid(
            "the window bound M must be at least 1".into(),
        ));
    }
    let degree = p.abs_degree().saturating_mul(bound as u64) + extra_degree;
    let cap = degree_cap();
    if degree > cap {
        return Err(Error::DegreeCap { degree, cap });
    }
    Ok(())
}

/// Powers `P, P^2, …, P^bound`, built incrementally as `P^{m+1} = P^m · P`.
struct Powers {
    base: AnyPoly,
    current: AnyPoly,
    m: u32,
}

impl Powers {
    fn new(base: AnyPoly) -> Self {
        Powers {
            current: base.clone(),
            base,
            m: 1,
        }
    }

    fn advance(&mut self) -> Result<()> {
        self.current = self.current.try_mul(&self.base)?;
        self.m += 1;
        Ok(())
    }
}

pub fn vanish_scan(
    p: &AnyPoly,
    functional: FunctionalKind,
    bound: u32,
) -> Result<VanishingProfile> {
    let p = functional.prepare(p)?;
    check_window(&p, 0, bound)?;
    let mut powers = Powers::new(p.clone());
    let mut values = Vec::with_capacity(bound as usize);
    loop {
        values.push(functional.apply(&powers.current)?);
        if powers.m == bound {
            break;
        }
        powers.advance()?;
    }
    Ok(profile_from(functional, p, bound, values))
}

fn profile_from(
    functional: FunctionalKind,
    poly: AnyPoly,
    bound: u32,
    values: Vec<ExactValue>,
) -> VanishingProfile {
    let first_nonzero = values
        .iter()
        .position(|v| !v.is_zero())
        .map(|k| k as u32 + 1);
    VanishingProfile {
        functional,
        poly,
        bound,
        values,
        first_nonzero,
        all_zero: first_nonzero.is_none(),
    }
}

/// What a probe says about the implication "all `L(P^m)` vanish ⇒
/// `L(P^m Q)` eventually vanishes", restricted to the window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeVerdict {
    /// Some `L(P^m)` is nonzero, so the implication says nothing.
    HypothesisFails,
    /// All `L(P^m)` vanish and `L(P^m Q)` is zero from some `m₀ ≤ M` on.
    Consistent,
    /// All `L(P^m)` vanish but `L(P^M Q) ≠ 0`.
    CounterexampleCandidate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MzProbeReport {
    pub profile: VanishingProfile,
    pub companion_poly: AnyPoly,
    /// `companion[k]` holds `L(P^{k+1} Q)`.
    pub companion: Vec<ExactValue>,
    pub last_nonzero: Option<u32>,
    /// Smallest `m₀` with `L(P^m Q) = 0` for all `m₀ ≤ m ≤ M`.
    pub zero_from: Option<u32>,
    pub eventually_zero_up_to_m: bool,
}

impl MzProbeReport {
    pub fn companion_value(&self, m: u32) -> &ExactValue {
        &self.companion[(m - 1) as usize]
    }

    pub fn verdict(&self) -> ProbeVerdict {
        if !self.profile.all_zero {
            ProbeVerdict::HypothesisFails
        } else if self.eventually_zero_up_to_m {
            ProbeVerdict::Consistent
        } else {
            ProbeVerdict::CounterexampleCandidate
        }
    }
}

pub fn mz_probe(
    p: &AnyPoly,
    q: &AnyPoly,
    functional: FunctionalKind,
    bound: u32,
) -> Result<MzProbeReport> {
    let p = functional.prepare(p)?;
    let q = functional.prepare(q)?;
    if p.arity() != q.arity() {
        return Err(Error::ArityMismatch {
            left: p.arity(),
            right: q.arity(),
        });
    }
    check_window(&p, q.abs_degree(), bound)?;

    let mut powers = Powers::new(p.clone());
    let mut values = Vec::with_capacity(bound as usize);
    let mut companion = Vec::with_capacity(bound as usize);
    loop {
        values.push(functional.apply(&powers.current)?);
        companion.push(functional.apply(&powers.current.try_mul(&q)?)?);
        if powers.m == bound {
            break;
        }
        powers.advance()?;
    }

    let last_nonzero = companion
        .iter()
        .rposition(|v| !v.is_zero())
        .map(|k| k as u32 + 1);
    let zero_from = match last_nonzero {
        None => Some(1),
        Some(m) if m < bound => Some(m + 1),
        Some(_) => None,
    };
    Ok(MzProbeReport {
        profile: profile_from(functional, p, bound, values),
        companion_poly: q,
        companion,
        last_nonzero,
        zero_from,
        eventually_zero_up_to_m: zero_from.is_some(),
    })
}
