//! The p-th root criterion for unbounded denominators.
//!
//! For `f = a_0 + sum a_m w^m` with every `a_m` integral at a prime `P`
//! above `p`, and `b_m` the coefficients of the formal `p`-th root, one
//! index with `-ord_P(b_m / b_0) > ord_P(a_0) / p` forces
//! `-ord_P(b_m)` to be unbounded. Integrality is arranged without scaling
//! `f` by shifting all valuations by their minimum, which turns the
//! threshold into `(ord(a_0) - v_min) / p`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::exactnum::rational::{check_prime, is_prime, val_p_unchecked, IntVal};
use crate::exactnum::{has_unique_prime, newton_polygon_valuations, ord_at_unique_prime, AlgebraicNumber};
use crate::qseries::{LaurentSeries, SeriesCoeff};
use crate::{Error, Rational, Result};

/// Coefficients the detector can value at primes.
pub trait DetectCoeff: SeriesCoeff {
    fn to_algebraic(&self) -> AlgebraicNumber;
}

impl DetectCoeff for Rational {
    fn to_algebraic(&self) -> AlgebraicNumber {
        AlgebraicNumber::rational(self)
    }
}

impl DetectCoeff for AlgebraicNumber {
    fn to_algebraic(&self) -> AlgebraicNumber {
        self.clone()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UbdStatus {
    UnboundedCertified,
    BoundedSoFar,
    Inconclusive,
}

impl UbdStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            UbdStatus::UnboundedCertified => "UnboundedCertified",
            UbdStatus::BoundedSoFar => "BoundedSoFar",
            UbdStatus::Inconclusive => "Inconclusive",
        }
    }
}

impl fmt::Display for UbdStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How valuations at primes above `p` are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ValuationMode {
    /// All coefficients rational: the usual `p`-adic valuation.
    Rational,
    /// A single prime above `p`: `ord = v_p(norm) / degree`.
    UniquePrimeNorm,
    /// Only the multiset of conjugate valuations is known. An element's
    /// valuation at any fixed prime lies between its extreme slopes.
    ConjugateProfile,
}

impl ValuationMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            ValuationMode::Rational => "rational",
            ValuationMode::UniquePrimeNorm => "unique-prime-norm",
            ValuationMode::ConjugateProfile => "conjugate-profile",
        }
    }
}

impl fmt::Display for ValuationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct UbdVerdict {
    pub status: UbdStatus,
    pub witness_index: Option<usize>,
    /// `ord(b_m / b_0)` at the witness (negative when certified).
    pub witness_valuation: Option<Rational>,
    pub threshold: Rational,
    /// Highest index `m` examined.
    pub truncation_used: usize,
    pub valuation_mode: ValuationMode,
    pub prime: u64,
    pub root_degree: u32,
    /// Why the verdict is not a certificate, when it is not.
    pub diagnostic: Option<String>,
}

/// Running maxima of `-ord(b_m / b_0)` for `m = 0..=T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthProfile {
    pub entries: Vec<(usize, Rational)>,
}

impl GrowthProfile {
    pub fn last(&self) -> Rational {
        self.entries.last().map(|e| e.1.clone()).unwrap_or_else(Rational::zero)
    }

    /// Running maximum at index `m`.
    pub fn at(&self, m: usize) -> Option<&Rational> {
        self.entries.get(m).map(|e| &e.1)
    }

    /// First index where the running maximum becomes positive.
    pub fn first_positive(&self) -> Option<usize> {
        self.entries.iter().find(|e| e.1.is_positive()).map(|e| e.0)
    }
}

/// Valuation bounds `[lo, hi]` of a coefficient, `None` for zero.
type Interval = Option<(Rational, Rational)>;

pub fn select_mode<K: DetectCoeff>(coeffs: &[K], p: u64) -> ValuationMode {
    if coeffs.iter().all(|c| c.as_rational().is_some()) {
        return ValuationMode::Rational;
    }
    match K::field_of(coeffs) {
        None => ValuationMode::Rational,
        Some(k) if has_unique_prime(&k, p) => ValuationMode::UniquePrimeNorm,
        Some(_) => ValuationMode::ConjugateProfile,
    }
}

fn interval(a: &AlgebraicNumber, p: u64, mode: ValuationMode) -> Result<Interval> {
    if a.is_zero() {
        return Ok(None);
    }
    if let Some(r) = a.to_rational() {
        let v = match val_p_unchecked(&r, p) {
            IntVal::Finite(v) => Rational::from_integer(v.into()),
            IntVal::Infinity => return Ok(None),
        };
        return Ok(Some((v.clone(), v)));
    }
    match mode {
        ValuationMode::Rational => Err(Error::InvalidArgument("irrational coefficient in rational mode".into())),
        ValuationMode::UniquePrimeNorm => {
            let v = ord_at_unique_prime(a, p)?;
            Ok(Some((v.clone(), v)))
        }
        ValuationMode::ConjugateProfile => {
            let prof = newton_polygon_valuations(a, p)?;
            Ok(Some((prof.min(), prof.max())))
        }
    }
}

struct Scan<K> {
    mode: ValuationMode,
    /// Valuation bounds of `a_0`.
    lead: (Rational, Rational),
    /// Minimum over `m` of the lower and upper valuation bounds of `a_m`.
    v_min_lo: Rational,
    v_min_hi: Rational,
    unit: LaurentSeries<K>,
    n: u32,
    p: u64,
}

impl<K: DetectCoeff> Scan<K> {
    fn new(f: &LaurentSeries<K>, n: u32, p: u64, t: usize) -> Result<Self> {
        check_prime(p)?;
        if n < 1 {
            return Err(Error::InvalidArgument("root degree must be positive".into()));
        }
        if f.is_zero() {
            return Err(Error::ZeroSeries);
        }
        let coeffs: Vec<K> = f.coeffs().iter().take(t + 1).cloned().collect();
        if coeffs.len() < t + 1 {
            return Err(Error::TruncationShortfall { wanted: t + 1, available: coeffs.len() });
        }
        let mode = select_mode(&coeffs, p);
        let vals: Vec<Interval> = coeffs
            .iter()
            .map(|c| interval(&c.to_algebraic(), p, mode))
            .collect::<Result<_>>()?;
        let lead = vals[0].clone().expect("leading coefficient is nonzero");
        let v_min_lo = vals.iter().flatten().map(|v| v.0.clone()).min().expect("nonempty");
        let v_min_hi = vals.iter().flatten().map(|v| v.1.clone()).min().expect("nonempty");
        let unit = f.truncate(t + 1).normalize()?.unit;
        Ok(Scan { mode, lead, v_min_lo, v_min_hi, unit, n, p })
    }

    /// Bounds for `b_m / b_0`, `m = 0..len`.
    fn ratios(&self, len: usize) -> Result<Vec<Interval>> {
        let root = self.unit.truncate(len).nth_root_normalized(self.n)?;
        root.coeffs()
            .iter()
            .map(|c| interval(&c.to_algebraic(), self.p, self.mode))
            .collect()
    }
}

/// Runs the criterion on `f` with root degree `n` at the prime `p` using the
/// coefficients `a_0 .. a_T`. The root is computed on doubling prefixes and
/// the search stops at the first witness.
///
/// Composite `n` never yields a certificate: the criterion is proven for
/// prime root degree, so a satisfied inequality there is `Inconclusive`.
pub fn detect<K: DetectCoeff>(f: &LaurentSeries<K>, n: u32, p: u64, t: usize) -> Result<UbdVerdict> {
    let s = Scan::new(f, n, p, t)?;
    let nr = Rational::from_integer(n.into());
    // Largest threshold over all primes above p, and a lower bound for it.
    let tau_hi = (&s.lead.1 - &s.v_min_lo) / &nr;
    let tau_lo = ((&s.lead.0 - &s.v_min_hi) / &nr).max(Rational::zero());
    let mut verdict = UbdVerdict {
        status: UbdStatus::BoundedSoFar,
        witness_index: None,
        witness_valuation: None,
        threshold: tau_hi.clone(),
        truncation_used: t,
        valuation_mode: s.mode,
        prime: p,
        root_degree: n,
        diagnostic: None,
    };
    let mut len = 8.min(t + 1);
    let ratios = loop {
        let ratios = s.ratios(len)?;
        let witness = ratios.iter().enumerate().skip(1).find_map(|(m, v)| match v {
            Some((_, hi)) if -hi.clone() > tau_hi => Some((m, hi.clone())),
            _ => None,
        });
        if let Some((m, hi)) = witness {
            verdict.witness_index = Some(m);
            verdict.witness_valuation = Some(hi);
            if is_prime(n as u64) {
                verdict.status = UbdStatus::UnboundedCertified;
            } else {
                verdict.status = UbdStatus::Inconclusive;
                verdict.diagnostic = Some(format!("inequality holds at m = {m} but root degree {n} is not prime"));
            }
            return Ok(verdict);
        }
        if len == t + 1 {
            break ratios;
        }
        len = (2 * len).min(t + 1);
    };
    let possible = ratios.iter().enumerate().skip(1).find(|(_, v)| match v {
        Some((lo, _)) => -lo.clone() > tau_lo,
        None => false,
    });
    if let Some((m, _)) = possible {
        verdict.status = UbdStatus::Inconclusive;
        verdict.diagnostic = Some(format!(
            "conjugate valuations at m = {m} straddle the threshold; no place-independent certificate"
        ));
    }
    Ok(verdict)
}

/// Running maxima of `-ord(b_m / b_0)`; in profile mode the bound valid at
/// every prime above `p` is used.
pub fn growth_profile<K: DetectCoeff>(f: &LaurentSeries<K>, n: u32, p: u64, t: usize) -> Result<GrowthProfile> {
    let s = Scan::new(f, n, p, t)?;
    let mut best = Rational::zero();
    let entries = s
        .ratios(t + 1)?
        .iter()
        .enumerate()
        .map(|(m, v)| {
            if let Some((_, hi)) = v {
                let neg = -hi.clone();
                if neg > best {
                    best = neg;
                }
            }
            (m, best.clone())
        })
        .collect();
    Ok(GrowthProfile { entries })
}
