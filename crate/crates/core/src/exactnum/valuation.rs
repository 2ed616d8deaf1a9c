//! Minimal polynomials, Newton polygons and valuations at primes above p.
//!
//! No maximal order is built. An element's minimal polynomial gives, via its
//! Newton polygon, the multiset of valuations of its conjugates. A single
//! place above `p` is certified when candidate elements force
//! `e * f > n / 2` for every prime above `p`: slopes whose denominators are
//! all divisible by `k` force `k | e`, and an integral element whose
//! minimal polynomial is a power of one irreducible of degree `d` modulo `p`
//! forces `d | f`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{AlgebraicNumber, NumberField, PlaceBounds};
use super::linalg::solve_in_span;
use super::poly::Poly;
use super::rational::{check_prime, val_p_unchecked, IntVal};
use super::zfactor::single_irreducible_power_degree;
use crate::scalar::Scalar;
use crate::{Error, Rational, Result};

/// Valuations (normalized by `ord(p) = 1`) of the conjugates of an element.
#[derive(Clone, Debug, PartialEq)]
pub struct ValuationProfile {
    pub prime: u64,
    /// Distinct valuations, increasing, with multiplicities.
    pub slopes: Vec<(Rational, usize)>,
    /// Whether the ambient field has a single prime above `prime`.
    pub unique_extension: bool,
}

impl ValuationProfile {
    pub fn min(&self) -> Rational {
        self.slopes.first().expect("nonempty profile").0.clone()
    }

    pub fn max(&self) -> Rational {
        self.slopes.last().expect("nonempty profile").0.clone()
    }

    pub fn degree(&self) -> usize {
        self.slopes.iter().map(|(_, m)| m).sum()
    }

    /// `sum valuation * multiplicity`, the valuation of the constant term of
    /// the minimal polynomial.
    pub fn weighted_sum(&self) -> Rational {
        self.slopes
            .iter()
            .map(|(v, m)| v * Rational::from_integer(BigInt::from(*m)))
            .sum()
    }
}

/// Lowest-degree monic rational polynomial vanishing at `a`, found as the
/// first linear dependence among its powers.
pub fn min_poly(a: &AlgebraicNumber) -> Poly<Rational> {
    if let Some(r) = a.to_rational() {
        return Poly::linear(r);
    }
    let mut powers = vec![AlgebraicNumber::one()];
    let mut vecs: Vec<Vec<Rational>> = Vec::new();
    let n = a.field_degree();
    let coords = |x: &AlgebraicNumber| -> Vec<Rational> { (0..n).map(|i| x.coord(i)).collect() };
    vecs.push(coords(&powers[0]));
    loop {
        let next = powers.last().unwrap() * a;
        let v = coords(&next);
        if let Some(c) = solve_in_span(&vecs, &v) {
            let mut out: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            out.push(Rational::one());
            return Poly::new(out);
        }
        vecs.push(v);
        powers.push(next);
    }
}

/// Valuations of the roots of `poly` at `p`, read off its Newton polygon.
pub fn newton_slopes(poly: &Poly<Rational>, p: u64) -> Vec<(Rational, usize)> {
    let pts: Vec<(i64, Rational)> = poly
        .coeffs()
        .iter()
        .enumerate()
        .filter_map(|(i, c)| match val_p_unchecked(c, p) {
            IntVal::Finite(v) => Some((i as i64, Rational::from_integer(v.into()))),
            IntVal::Infinity => None,
        })
        .collect();
    // Lower convex hull, left to right.
    let mut hull: Vec<(i64, Rational)> = Vec::new();
    for pt in pts {
        while hull.len() >= 2 {
            let (x1, y1) = &hull[hull.len() - 2];
            let (x2, y2) = &hull[hull.len() - 1];
            // Drop the middle point when it lies on or above the chord.
            let lhs = (y2 - y1) * Rational::from_integer((pt.0 - x1).into());
            let rhs = (&pt.1 - y1) * Rational::from_integer((x2 - x1).into());
            if lhs >= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut slopes: Vec<(Rational, usize)> = hull
        .windows(2)
        .map(|w| {
            let len = w[1].0 - w[0].0;
            let slope = (&w[1].1 - &w[0].1) / Rational::from_integer(len.into());
            (-slope, len as usize)
        })
        .collect();
    // Roots at zero contribute no finite valuation; hull starts at the
    // first nonzero coefficient so they are simply absent.
    slopes.sort_by(|a, b| a.0.cmp(&b.0));
    slopes
}

pub fn newton_polygon_valuations(a: &AlgebraicNumber, p: u64) -> Result<ValuationProfile> {
    check_prime(p)?;
    if a.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let unique = match a.field() {
        None => true,
        Some(f) => has_unique_prime(f, p),
    };
    Ok(ValuationProfile { prime: p, slopes: newton_slopes(&min_poly(a), p), unique_extension: unique })
}

fn reduce_mod_p(c: &Rational, p: u64) -> BigInt {
    let pz = BigInt::from(p);
    let d = c.denom().mod_floor(&pz);
    let inv = d.modpow(&(&pz - 2u32), &pz);
    (c.numer() * inv).mod_floor(&pz)
}

/// Divisibility constraints on `(e, f)` forced by a single element.
fn element_bounds(a: &AlgebraicNumber, p: u64) -> PlaceBounds {
    if a.is_zero() {
        return PlaceBounds { ramification: 1, residue_degree: 1 };
    }
    let mp = min_poly(a);
    let slopes = newton_slopes(&mp, p);
    let ramification = slopes.iter().fold(0usize, |g, (v, _)| {
        let d: usize = v.denom().try_into().unwrap_or(1);
        g.gcd(&d)
    });
    let mut residue_degree = 1;
    if slopes.iter().all(|(v, _)| !v.is_negative()) && p != 0 {
        let reduced: Vec<BigInt> = mp.coeffs().iter().map(|c| reduce_mod_p(c, p)).collect();
        if let Some(d) = single_irreducible_power_degree(&reduced, p) {
            residue_degree = d;
        }
    }
    PlaceBounds { ramification: ramification.max(1), residue_degree }
}

fn default_candidates(field: &Arc<NumberField>, p: u64) -> Vec<AlgebraicNumber> {
    let n = field.degree();
    let t = field.generator();
    let mut out = Vec::new();
    let range = p as i64;
    for i in 1..n.max(2) {
        let ti = t.pow(i as u32);
        for c in -range..=range {
            out.push(&ti + &AlgebraicNumber::from_i64(c));
        }
    }
    out
}

fn unique_from(bounds: PlaceBounds, n: usize) -> bool {
    2 * bounds.ramification * bounds.residue_degree > n
}

/// Tries to certify a single prime above `p`, using `hints` besides the
/// default candidates `t^i + c`. Positive results are cached on the field.
pub fn certify_unique_prime(field: &Arc<NumberField>, p: u64, hints: &[AlgebraicNumber]) -> bool {
    let n = field.degree();
    if let Some(b) = field.cached_places(p) {
        if unique_from(b, n) {
            return true;
        }
    }
    let mut acc = PlaceBounds { ramification: 1, residue_degree: 1 };
    for a in hints.iter().cloned().chain(default_candidates(field, p)) {
        let b = element_bounds(&a, p);
        acc.ramification = acc.ramification.lcm(&b.ramification);
        acc.residue_degree = acc.residue_degree.lcm(&b.residue_degree);
        if unique_from(acc, n) {
            break;
        }
    }
    field.store_places(p, acc);
    unique_from(field.cached_places(p).unwrap_or(acc), n)
}

pub fn has_unique_prime(field: &Arc<NumberField>, p: u64) -> bool {
    certify_unique_prime(field, p, &[])
}

/// `ord(a)` at the unique prime above `p`, normalized by `ord(p) = 1`.
pub fn ord_at_unique_prime(a: &AlgebraicNumber, p: u64) -> Result<Rational> {
    check_prime(p)?;
    if a.is_zero() {
        return Err(Error::ZeroValuation);
    }
    match a.field() {
        Some(f) if !a.is_rational() => {
            if !has_unique_prime(f, p) {
                return Err(Error::NotUniquelyExtended(p));
            }
            let v = match val_p_unchecked(&a.norm(), p) {
                IntVal::Finite(v) => v,
                IntVal::Infinity => return Err(Error::ZeroValuation),
            };
            Ok(Rational::new(v.into(), BigInt::from(f.degree())))
        }
        _ => match val_p_unchecked(&a.coord(0), p) {
            IntVal::Finite(v) => Ok(Rational::from_integer(v.into())),
            IntVal::Infinity => Err(Error::ZeroValuation),
        },
    }
}
