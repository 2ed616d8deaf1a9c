//! Dedekind eta quotients `prod eta(delta z)^r` as integer series in `w`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::series::LaurentSeries;
use crate::exactnum::rational::{format_rational, parse_rational};
use crate::{Error, Rational, Result};

/// `prod eta(delta z)^r` over its terms `(delta, r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotient {
    terms: Vec<(Rational, i64)>,
}

impl EtaQuotient {
    pub fn new(terms: Vec<(Rational, i64)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidEtaQuotient("no terms".into()));
        }
        if let Some((d, _)) = terms.iter().find(|(d, _)| !d.is_positive()) {
            return Err(Error::InvalidEtaQuotient(format!("scale {} is not positive", format_rational(d))));
        }
        Ok(EtaQuotient { terms })
    }

    /// Parses `delta:exp,delta:exp,...` with `delta` an integer or `a/b`.
    pub fn parse(s: &str) -> Result<Self> {
        let terms = s
            .split(',')
            .map(|part| {
                let (d, e) = part
                    .trim()
                    .split_once(':')
                    .ok_or_else(|| Error::InvalidEtaQuotient(format!("term '{part}' lacks ':'")))?;
                let delta = parse_rational(d.trim())
                    .map_err(|_| Error::InvalidEtaQuotient(format!("bad scale '{d}'")))?;
                let exp = e
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidEtaQuotient(format!("bad exponent '{e}'")))?;
                Ok((delta, exp))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(terms)
    }

    pub fn terms(&self) -> &[(Rational, i64)] {
        &self.terms
    }

    /// `sum r * delta / 24`, the order at infinity in `q`.
    pub fn q_order(&self) -> Rational {
        self.terms
            .iter()
            .map(|(d, r)| d * Rational::from_integer((*r).into()))
            .sum::<Rational>()
            / Rational::from_integer(24.into())
    }

    /// Smallest `N` with every `N * delta` integral and `N * q_order` integral.
    pub fn minimal_width(&self) -> u32 {
        let mut n = self.terms.iter().fold(BigInt::one(), |acc, (d, _)| acc.lcm(d.denom()));
        let ord = self.q_order() * Rational::from_integer(n.clone());
        n *= ord.denom();
        n.to_u32().expect("width fits in u32")
    }

    fn check_width(&self, width: u32) -> Result<()> {
        let n = Rational::from_integer(width.into());
        for (d, _) in &self.terms {
            if !(d * &n).is_integer() {
                return Err(Error::IncompatibleWidth {
                    width,
                    reason: format!("q^{} is not a power of w", format_rational(d)),
                });
            }
        }
        if !(self.q_order() * &n).is_integer() {
            return Err(Error::IncompatibleWidth {
                width,
                reason: format!("leading exponent {} in q is not a power of w", format_rational(&self.q_order())),
            });
        }
        Ok(())
    }

    /// Expansion in `w = q^(1/width)` with `truncation` terms from the lead.
    pub fn expand(&self, width: u32, truncation: usize) -> Result<LaurentSeries<Rational>> {
        if width == 0 {
            return Err(Error::InvalidArgument("series width must be positive".into()));
        }
        self.check_width(width)?;
        let lead = (self.q_order() * Rational::from_integer(width.into())).to_integer();
        Ok(self.expand_unit(width, truncation)?.shift(lead.to_i64().expect("lead")))
    }

    /// The product without its leading power of `q`, as a series `1 + O(w)`.
    /// Only the scales need to be compatible with `width`.
    pub fn expand_unit(&self, width: u32, truncation: usize) -> Result<LaurentSeries<Rational>> {
        if width == 0 {
            return Err(Error::InvalidArgument("series width must be positive".into()));
        }
        let n = Rational::from_integer(width.into());
        if let Some((d, _)) = self.terms.iter().find(|(d, _)| !(d * &n).is_integer()) {
            return Err(Error::IncompatibleWidth {
                width,
                reason: format!("q^{} is not a power of w", format_rational(d)),
            });
        }
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); truncation];
        if truncation > 0 {
            acc[0] = BigInt::one();
        }
        for (d, r) in &self.terms {
            let step = (d * &n).to_integer().to_usize().expect("step");
            let inner_len = truncation.div_ceil(step.max(1)).max(1);
            let base = if *r >= 0 {
                pentagonal(inner_len)
            } else {
                inverse_pentagonal(inner_len)
            };
            let factor = int_pow(&base, r.unsigned_abs(), inner_len);
            let mut spread = vec![BigInt::zero(); truncation];
            for (i, c) in factor.into_iter().enumerate() {
                if i * step < truncation {
                    spread[i * step] = c;
                }
            }
            acc = int_mul(&acc, &spread, truncation);
        }
        LaurentSeries::new(width, 0, acc.into_iter().map(Rational::from_integer).collect())
    }
}

impl fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(d, r)| format!("{}:{r}", format_rational(d))).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `prod_{n >= 1} (1 - x^n)` to `len` terms by Euler's pentagonal theorem.
pub fn pentagonal(len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    if len == 0 {
        return out;
    }
    out[0] = BigInt::one();
    for k in 1i64.. {
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let e1 = (k * (3 * k - 1) / 2) as usize;
        let e2 = (k * (3 * k + 1) / 2) as usize;
        if e1 >= len {
            break;
        }
        out[e1] = sign.clone();
        if e2 < len {
            out[e2] = sign;
        }
    }
    out
}

/// `prod 1/(1 - x^n)`: the partition numbers, via the pentagonal recurrence.
fn inverse_pentagonal(len: usize) -> Vec<BigInt> {
    let penta = pentagonal(len);
    let support: Vec<usize> = (1..len).filter(|&i| !penta[i].is_zero()).collect();
    let mut out: Vec<BigInt> = Vec::with_capacity(len);
    for n in 0..len {
        if n == 0 {
            out.push(BigInt::one());
            continue;
        }
        let mut acc = BigInt::zero();
        for &i in support.iter().take_while(|&&i| i <= n) {
            acc -= &penta[i] * &out[n - i];
        }
        out.push(acc);
    }
    out
}

fn int_mul(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn int_pow(base: &[BigInt], mut e: u64, len: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); len];
    acc[0] = BigInt::one();
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = int_mul(&acc, &b, len);
        }
        e >>= 1;
        if e > 0 {
            b = int_mul(&b, &b, len);
        }
    }
    acc
}
