//! Dense univariate polynomials over a [`Scalar`] field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::scalar::Scalar;
use crate::{Error, Rational, Result};

/// Coefficients stored low degree first; no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

impl<K: Scalar> Poly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: K) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(K::one())
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly::monomial(K::one(), 1)
    }

    pub fn monomial(c: K, deg: usize) -> Self {
        let mut v = vec![K::zero(); deg + 1];
        v[deg] = c;
        Poly::new(v)
    }

    /// `x - r`.
    pub fn linear(r: K) -> Self {
        Poly::new(vec![-r, K::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| K::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1.
    pub fn deg_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn lead(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn map<L: Scalar>(&self, f: impl Fn(&K) -> L) -> Poly<L> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &K) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn eval(&self, at: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc *= at;
            acc += c;
        }
        acc
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &Poly<K>) -> Poly<K> {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_ref(&K::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Poly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn monic(&self) -> Result<Self> {
        let lc = self.lead().ok_or(Error::DivisionByZero)?;
        let inv = lc.try_inv().ok_or(Error::DivisionByZero)?;
        Ok(self.scale(&inv))
    }

    pub fn div_rem(&self, d: &Poly<K>) -> Result<(Poly<K>, Poly<K>)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.coeffs[dd].try_inv().ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![K::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].mul_ref(&inv);
            for (j, c) in d.coeffs.iter().enumerate() {
                let t = q.mul_ref(c);
                rem[i - dd + j] -= &t;
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, d: &Poly<K>) -> Result<Poly<K>> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact division; errors when a remainder is left.
    pub fn div_exact(&self, d: &Poly<K>) -> Result<Poly<K>> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InvalidArgument("polynomial division is not exact".into()))
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly<K>) -> Poly<K> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic().expect("nonzero")
        }
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Poly<K>) -> (Poly<K>, Poly<K>, Poly<K>) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().and_then(|c| c.try_inv()) {
            Some(inv) => (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)),
            None => (r0, s0, t0),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

impl<K: Scalar> Add for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &Poly<K>) -> Poly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeff(i);
            if let Some(r) = rhs.coeffs.get(i) {
                c += r;
            }
            v.push(c);
        }
        Poly::new(v)
    }
}

impl<K: Scalar> Sub for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &Poly<K>) -> Poly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeff(i);
            if let Some(r) = rhs.coeffs.get(i) {
                c -= r;
            }
            v.push(c);
        }
        Poly::new(v)
    }
}

impl<K: Scalar> Mul for &Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &Poly<K>) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a.mul_ref(b);
                v[i + j] += &t;
            }
        }
        Poly::new(v)
    }
}

impl<K: Scalar> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<K: Scalar> $tr for Poly<K> {
            type Output = Poly<K>;
            fn $m(self, rhs: Poly<K>) -> Poly<K> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Poly<Rational> {
    /// Parse a whitespace-separated coefficient list, constant term first.
    pub fn parse_coeffs(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(super::rational::parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == Rational::from_integer(1.into());
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, rat};

    type P = Poly<Rational>;

    #[test]
    fn division_and_gcd() {
        let a = P::from_i64(&[-1, 0, 1]); // x^2 - 1
        let b = P::from_i64(&[1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, P::from_i64(&[-1, 1]));
        assert!(r.is_zero());
        let c = P::from_i64(&[1, 2, 1]);
        assert_eq!(a.gcd(&c), b);
        let (g, s, t) = a.xgcd(&c);
        assert_eq!(&(&s * &a) + &(&t * &c), g);
    }

    #[test]
    fn eval_compose_derivative() {
        let f = P::from_i64(&[-20, -10, -1, 1]);
        assert_eq!(f.eval(&int(5)), int(125 - 25 - 50 - 20));
        let shifted = f.compose(&P::from_i64(&[1, 1]));
        assert_eq!(shifted.eval(&int(0)), f.eval(&int(1)));
        assert_eq!(f.derivative(), P::from_i64(&[-10, -2, 3]));
        assert_eq!(P::from_i64(&[1, 1]).pow(3), P::from_i64(&[1, 3, 3, 1]));
    }

    #[test]
    fn display() {
        let f = P::new(vec![rat(-79, 4), int(-10), int(-1), int(1)]);
        assert_eq!(f.to_string(), "x^3 - x^2 - 10*x - 79/4");
    }
}
