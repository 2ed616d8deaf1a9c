//! Rational helpers: primality, p-adic valuation and the `p/q` text form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

/// A p-adic valuation of a rational: finite, or `Infinity` for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IntVal {
    Finite(i64),
    Infinity,
}

impl IntVal {
    pub fn finite(self) -> Option<i64> {
        match self {
            IntVal::Finite(v) => Some(v),
            IntVal::Infinity => None,
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Exponent of `p` in a nonzero integer.
pub(crate) fn val_p_int(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `val_p(r)`: the exponent of `p` in `r`, `Infinity` for zero.
pub fn val_p(r: &Rational, p: u64) -> Result<IntVal> {
    check_prime(p)?;
    Ok(val_p_unchecked(r, p))
}

pub(crate) fn val_p_unchecked(r: &Rational, p: u64) -> IntVal {
    if r.is_zero() {
        return IntVal::Infinity;
    }
    IntVal::Finite(val_p_int(r.numer(), p) - val_p_int(r.denom(), p))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text form, always `p/q` (so `5` prints as `5/1`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `lcm` of the denominators of a slice of rationals.
pub(crate) fn common_denominator<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}
