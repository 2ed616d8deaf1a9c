//! Truncated Laurent series in `w = q^(1/N)`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::exactnum::Poly;
use crate::scalar::Scalar;
use crate::{Error, Rational, Result};

/// Below this many output terms the convolution stays sequential.
const PAR_THRESHOLD: usize = 96;

/// `sum_{k >= lead} c_k w^k + O(w^precision)`, where `w^N = q`.
///
/// Coefficients are stored densely for exponents `lead .. precision`; the
/// first stored coefficient is nonzero unless the series is zero to its
/// precision, in which case nothing is stored and `lead == precision`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries<K> {
    width: u32,
    lead: i64,
    coeffs: Vec<K>,
}

/// A series split as `c * w^lead * unit` with `unit = 1 + O(w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Normalized<K> {
    pub lead: i64,
    pub leading_coeff: K,
    pub unit: LaurentSeries<K>,
}

impl<K: Scalar> LaurentSeries<K> {
    /// Series with `coeffs[i]` at exponent `lead + i`; leading zeros are
    /// stripped, so the truncation counts from the true leading term.
    pub fn new(width: u32, lead: i64, coeffs: Vec<K>) -> Result<Self> {
        if width == 0 {
            return Err(Error::InvalidArgument("series width must be positive".into()));
        }
        Ok(Self::build(width, lead, coeffs))
    }

    fn build(width: u32, lead: i64, mut coeffs: Vec<K>) -> Self {
        let skip = coeffs.iter().take_while(|c| c.is_zero()).count();
        if skip > 0 {
            coeffs.drain(..skip);
        }
        LaurentSeries { width, lead: lead + skip as i64, coeffs }
    }

    /// `O(w^precision)`.
    pub fn zero(width: u32, precision: i64) -> Self {
        LaurentSeries { width, lead: precision, coeffs: Vec::new() }
    }

    /// `c * w^exp` known to `truncation` terms.
    pub fn monomial(width: u32, c: K, exp: i64, truncation: usize) -> Self {
        let mut coeffs = vec![K::zero(); truncation];
        if truncation > 0 {
            coeffs[0] = c;
        }
        Self::build(width, exp, coeffs)
    }

    pub fn one(width: u32, truncation: usize) -> Self {
        Self::monomial(width, K::one(), 0, truncation)
    }

    /// A polynomial in `w` (plus `O(w^precision)`).
    pub fn from_poly(width: u32, p: &Poly<K>, precision: i64) -> Self {
        let coeffs = (0..precision.max(0) as usize).map(|i| p.coeff(i)).collect();
        Self::build(width, 0, coeffs)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    /// Exponent of the leading term (equal to the precision for zero).
    pub fn lead(&self) -> i64 {
        self.lead
    }

    /// Number of known terms counted from the leading exponent.
    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    /// Exclusive bound on known exponents.
    pub fn precision(&self) -> i64 {
        self.lead + self.coeffs.len() as i64
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead_coeff(&self) -> Option<&K> {
        self.coeffs.first()
    }

    /// Coefficient of `w^exp`, `None` past the precision.
    pub fn coeff(&self, exp: i64) -> Option<K> {
        if exp >= self.precision() {
            None
        } else if exp < self.lead {
            Some(K::zero())
        } else {
            Some(self.coeffs[(exp - self.lead) as usize].clone())
        }
    }

    fn coeff_or_zero(&self, exp: i64) -> K {
        if exp < self.lead || exp >= self.precision() {
            K::zero()
        } else {
            self.coeffs[(exp - self.lead) as usize].clone()
        }
    }

    fn representative(&self) -> Option<&K> {
        self.coeffs.iter().find(|c| c.as_rational().is_none())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.width != other.width {
            return Err(Error::WidthMismatch(self.width, other.width));
        }
        if let (Some(a), Some(b)) = (self.representative(), other.representative()) {
            if !a.compatible(b) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(())
    }

    /// Keeps at most `truncation` terms from the leading one.
    pub fn truncate(&self, truncation: usize) -> Self {
        let mut out = self.clone();
        out.coeffs.truncate(truncation);
        out
    }

    /// Drops everything at exponents `>= precision`.
    pub fn with_precision(&self, precision: i64) -> Self {
        if precision <= self.lead {
            return Self::zero(self.width, precision.min(self.precision()));
        }
        self.truncate((precision - self.lead) as usize)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.add_impl(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.add_impl(other, true))
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let prec = self.precision().min(other.precision());
        let lead = self.lead.min(other.lead).min(prec);
        let coeffs = (lead..prec)
            .map(|e| {
                let a = self.coeff_or_zero(e);
                let b = other.coeff_or_zero(e);
                if negate {
                    a - b
                } else {
                    a + b
                }
            })
            .collect();
        Self::build(self.width, lead, coeffs)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let lead = self.lead + other.lead;
        let prec = (self.lead + other.precision()).min(other.lead + self.precision());
        let len = (prec - lead).max(0) as usize;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.width, prec));
        }
        let (a, b) = (&self.coeffs, &other.coeffs);
        let term = |k: usize| -> K {
            let mut acc = K::zero();
            let lo = k.saturating_sub(b.len() - 1);
            for i in lo..=k.min(a.len() - 1) {
                if a[i].is_zero() {
                    continue;
                }
                acc += &a[i].mul_ref(&b[k - i]);
            }
            acc
        };
        let coeffs: Vec<K> = if len >= PAR_THRESHOLD {
            (0..len).into_par_iter().map(term).collect()
        } else {
            (0..len).map(term).collect()
        };
        Ok(Self::build(self.width, lead, coeffs))
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.width, self.precision());
        }
        Self::build(self.width, self.lead, self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&K::from_rational(r))
    }

    /// Multiplication by `w^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries { width: self.width, lead: self.lead + k, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.width, self.truncation());
        let mut base = self.clone();
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

    /// Reciprocal, with the same truncation.
    pub fn invert(&self) -> Result<Self> {
        let a = &self.coeffs;
        let a0_inv = a.first().ok_or(Error::ZeroSeries)?.try_inv().ok_or(Error::ZeroSeries)?;
        let n = a.len();
        let mut h: Vec<K> = Vec::with_capacity(n);
        h.push(a0_inv.clone());
        for k in 1..n {
            let mut acc = K::zero();
            for j in 1..=k {
                if a[j].is_zero() {
                    continue;
                }
                acc += &a[j].mul_ref(&h[k - j]);
            }
            h.push(-acc.mul_ref(&a0_inv));
        }
        Ok(Self::build(self.width, -self.lead, h))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.invert()?)
    }

    /// The operator `D = w d/dw`.
    pub fn derivation_wdw(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&Rational::from_integer((self.lead + i as i64).into())))
            .collect();
        Self::build(self.width, self.lead, coeffs)
    }

    /// `c * w^lead * (1 + O(w))`.
    pub fn normalize(&self) -> Result<Normalized<K>> {
        let c = self.lead_coeff().ok_or(Error::ZeroSeries)?.clone();
        let inv = c.try_inv().ok_or(Error::ZeroSeries)?;
        let unit = LaurentSeries {
            width: self.width,
            lead: 0,
            coeffs: self.coeffs.iter().map(|x| x.mul_ref(&inv)).collect(),
        };
        Ok(Normalized { lead: self.lead, leading_coeff: c, unit })
    }

    fn is_normalized_unit(&self) -> bool {
        self.lead == 0 && self.lead_coeff().is_some_and(|c| c.is_one())
    }

    /// The unique `g = 1 + O(w)` with `g^n = self`, for `self = 1 + O(w)`.
    ///
    /// Uses the power-series recurrence for `g = f^a`:
    /// `k g_k = sum_{j=1..k} ((a + 1) j - k) f_j g_{k-j}` with `a = 1/n`.
    pub fn nth_root_normalized(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("root degree must be positive".into()));
        }
        if !self.is_normalized_unit() {
            return Err(Error::NotNormalized(format!(
                "expected 1 + O(w), got leading exponent {}",
                self.lead
            )));
        }
        let f = &self.coeffs;
        let len = f.len();
        let inv_n = Rational::new(1.into(), n.into());
        let a_plus_one = &inv_n + Rational::one();
        let mut g: Vec<K> = Vec::with_capacity(len);
        g.push(K::one());
        for k in 1..len {
            let mut acc = K::zero();
            for j in 1..=k {
                if f[j].is_zero() {
                    continue;
                }
                let w = &a_plus_one * Rational::from_integer((j as i64).into())
                    - Rational::from_integer((k as i64).into());
                if w.is_zero() {
                    continue;
                }
                acc += &f[j].mul_ref(&g[k - j]).scale(&w);
            }
            g.push(acc.scale(&Rational::new(1.into(), (k as i64).into())));
        }
        Ok(LaurentSeries { width: self.width, lead: 0, coeffs: g })
    }

    pub fn map<L: Scalar>(&self, f: impl Fn(&K) -> L) -> LaurentSeries<L> {
        LaurentSeries::build(self.width, self.lead, self.coeffs.iter().map(f).collect())
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &Poly<K>) -> Self {
        let deg = p.degree().unwrap_or(0) as i64;
        // Constants are exact; give them more terms than can ever matter.
        let t = (self.truncation() as i64 + self.lead.abs() * deg + self.precision().max(0)) as usize;
        let mut coeffs = p.coeffs().iter().rev();
        let Some(top) = coeffs.next() else {
            return Self::zero(self.width, t as i64);
        };
        let mut acc = Self::monomial(self.width, top.clone(), 0, t);
        for c in coeffs {
            acc = &(&acc * self) + &Self::monomial(self.width, c.clone(), 0, t);
        }
        acc
    }
}

impl<K: Scalar> Add for &LaurentSeries<K> {
    type Output = LaurentSeries<K>;
    fn add(self, rhs: &LaurentSeries<K>) -> LaurentSeries<K> {
        self.checked_add(rhs).expect("incompatible series")
    }
}

impl<K: Scalar> Sub for &LaurentSeries<K> {
    type Output = LaurentSeries<K>;
    fn sub(self, rhs: &LaurentSeries<K>) -> LaurentSeries<K> {
        self.checked_sub(rhs).expect("incompatible series")
    }
}

impl<K: Scalar> Mul for &LaurentSeries<K> {
    type Output = LaurentSeries<K>;
    fn mul(self, rhs: &LaurentSeries<K>) -> LaurentSeries<K> {
        self.checked_mul(rhs).expect("incompatible series")
    }
}

impl<K: Scalar> Neg for &LaurentSeries<K> {
    type Output = LaurentSeries<K>;
    fn neg(self) -> LaurentSeries<K> {
        LaurentSeries {
            width: self.width,
            lead: self.lead,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, rat};

    type S = LaurentSeries<Rational>;

    fn s(lead: i64, c: &[i64]) -> S {
        S::new(1, lead, c.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn ring_examples() {
        let p = &s(0, &[1, 1, 0, 0]) * &s(0, &[1, -1, 0, 0]);
        assert_eq!(p, s(0, &[1, 0, -1, 0]));
        let z = S::zero(1, 5);
        assert_eq!(&s(-1, &[1, 0, 0]) + &z, s(-1, &[1, 0, 0]));
        let geo = s(0, &[1; 6]);
        assert_eq!(&geo * &s(0, &[1, -1, 0, 0, 0, 0]), s(0, &[1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn cancellation_moves_the_lead() {
        let d = &s(0, &[1, 2, 3]) - &s(0, &[1, 0, 0]);
        assert_eq!(d.lead(), 1);
        assert_eq!(d.truncation(), 2);
        let z = &s(0, &[1, 2]) - &s(0, &[1, 2]);
        assert!(z.is_zero());
        assert_eq!(z.precision(), 2);
    }

    #[test]
    fn inversion() {
        assert_eq!(s(0, &[1, -1, 0, 0]).invert().unwrap(), s(0, &[1, 1, 1, 1]));
        assert_eq!(s(-2, &[1, 0, 0]).invert().unwrap(), s(2, &[1, 0, 0]));
        assert!(matches!(S::zero(1, 3).invert(), Err(Error::ZeroSeries)));
    }

    #[test]
    fn roots() {
        assert_eq!(s(0, &[1, 2, 1, 0]).nth_root_normalized(2).unwrap(), s(0, &[1, 1, 0, 0]));
        assert_eq!(s(0, &[1, 3, 3, 1, 0]).nth_root_normalized(3).unwrap(), s(0, &[1, 1, 0, 0, 0]));
        let r = s(0, &[1, 1, 0]).nth_root_normalized(5).unwrap();
        assert_eq!(r.coeffs(), &[int(1), rat(1, 5), rat(-2, 25)]);
        assert!(matches!(s(0, &[2, 1]).nth_root_normalized(2), Err(Error::NotNormalized(_))));
        assert!(matches!(s(1, &[1, 1]).nth_root_normalized(2), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn derivation() {
        let d = s(-1, &[1, 0, 1, 0]).derivation_wdw();
        assert_eq!(d, s(-1, &[-1, 0, 1, 0]));
        let c = s(0, &[5, 0, 0]).derivation_wdw();
        assert!(c.is_zero());
        assert_eq!(c.precision(), 3);
    }

    #[test]
    fn width_is_checked() {
        let a = S::new(11, 0, vec![int(1)]).unwrap();
        let b = S::new(1, 0, vec![int(1)]).unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::WidthMismatch(11, 1))));
        assert!(S::new(0, 0, vec![]).is_err());
    }

    #[test]
    fn polynomial_evaluation() {
        let x = s(-2, &[1, 2, 4, 5, 8]);
        let p = Poly::from_i64(&[-16, 1]);
        let v = x.eval_poly(&p);
        assert_eq!(v, s(-2, &[1, 2, -12, 5, 8]));
        let sq = x.eval_poly(&Poly::from_i64(&[0, 0, 1]));
        assert_eq!(sq, &x * &x);
    }

    #[test]
    fn large_products_match_sequential() {
        let a = S::new(1, 0, (0..200).map(|i| int(i % 7 - 3)).collect()).unwrap();
        let b = S::new(1, 0, (0..200).map(|i| int(i % 5 - 1)).collect()).unwrap();
        let p = &a * &b;
        let k = 150;
        let direct: Rational = (0..=k).map(|i| a.coeffs()[i].clone() * b.coeffs()[k - i].clone()).sum();
        assert_eq!(p.coeff(k as i64).unwrap(), direct);
    }
}
