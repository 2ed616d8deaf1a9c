//! Number fields `Q[t]/(f)` with `f` monic over Z, and their elements.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::rational::common_denominator;
use super::zfactor;
use crate::scalar::Scalar;
use crate::{Error, Rational, Result};

pub struct NumberField {
    poly: Poly<Rational>,
    int_poly: Vec<BigInt>,
    places: Mutex<HashMap<u64, PlaceBounds>>,
}

/// Lower bounds `e | e_P`, `f | f_P` valid for every prime `P` above `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlaceBounds {
    pub ramification: usize,
    pub residue_degree: usize,
}

impl NumberField {
    /// Field defined by a monic, integral, irreducible polynomial.
    pub fn new(poly: Poly<Rational>) -> Result<Arc<Self>> {
        let deg = poly.degree().unwrap_or(0);
        if deg == 0 {
            return Err(Error::NotMonicIntegral("degree must be at least 1".into()));
        }
        if !poly.lead().is_some_and(|c| c.is_one()) || poly.coeffs().iter().any(|c| !c.is_integer())
        {
            return Err(Error::NotMonicIntegral(poly.to_string()));
        }
        if !zfactor::is_irreducible(&poly) {
            return Err(Error::Reducible(poly.to_string()));
        }
        let int_poly = poly.coeffs().iter().map(|c| c.to_integer()).collect();
        Ok(Arc::new(NumberField { poly, int_poly, places: Mutex::new(HashMap::new()) }))
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Arc<Self>> {
        Self::new(Poly::from_i64(coeffs))
    }

    /// Field generated by a root `r` of an irreducible rational polynomial.
    /// Returns the field and the integer `d` such that its generator is `d*r`.
    pub fn from_rational_poly(poly: &Poly<Rational>) -> Result<(Arc<Self>, BigInt)> {
        let g = poly.monic()?;
        let n = g.degree().unwrap_or(0);
        let mut d = BigInt::one();
        // Smallest d with d^(n-i) * c_i integral for all i.
        for i in 0..n {
            let c = g.coeff(i);
            if c.is_zero() {
                continue;
            }
            let e = (n - i) as u32;
            let den = c.denom().clone();
            let mut need = BigInt::one();
            for (q, mult) in factor_small(&den) {
                let exp = mult.div_ceil(e as u64);
                need *= q.pow(exp as u32);
            }
            d = d.lcm(&need);
        }
        let scaled: Vec<Rational> = (0..=n)
            .map(|i| g.coeff(i) * Rational::from_integer(d.pow((n - i) as u32)))
            .collect();
        let field = Self::new(Poly::new(scaled))?;
        Ok((field, d))
    }

    pub fn poly(&self) -> &Poly<Rational> {
        &self.poly
    }

    pub fn int_poly(&self) -> &[BigInt] {
        &self.int_poly
    }

    pub fn degree(&self) -> usize {
        self.int_poly.len() - 1
    }

    pub fn generator(self: &Arc<Self>) -> AlgebraicNumber {
        AlgebraicNumber::from_int_coords(self, vec![BigInt::zero(), BigInt::one()], BigInt::one())
    }

    pub fn same_as(&self, other: &NumberField) -> bool {
        std::ptr::eq(self, other) || self.int_poly == other.int_poly
    }

    pub(crate) fn cached_places(&self, p: u64) -> Option<PlaceBounds> {
        self.places.lock().expect("poisoned").get(&p).copied()
    }

    pub(crate) fn store_places(&self, p: u64, b: PlaceBounds) {
        let mut map = self.places.lock().expect("poisoned");
        let entry = map.entry(p).or_insert(b);
        entry.ramification = entry.ramification.lcm(&b.ramification);
        entry.residue_degree = entry.residue_degree.lcm(&b.residue_degree);
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", self.poly)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

/// Trial-division factorization of a denominator (denominators here are
/// products of small primes).
fn factor_small(n: &BigInt) -> Vec<(BigInt, u64)> {
    let mut out = Vec::new();
    let mut n = n.abs();
    let mut q = BigInt::from(2);
    while &q * &q <= n {
        let mut e = 0;
        while (&n % &q).is_zero() {
            n /= &q;
            e += 1;
        }
        if e > 0 {
            out.push((q.clone(), e));
        }
        q += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// An element `num(t) / den` of a number field, or of Q when `field` is `None`.
///
/// `num` has no trailing zeros, `den > 0`, and `gcd(content(num), den) = 1`.
#[derive(Clone)]
pub struct AlgebraicNumber {
    field: Option<Arc<NumberField>>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl AlgebraicNumber {
    pub fn rational(r: &Rational) -> Self {
        Self::raw(None, vec![r.numer().clone()], r.denom().clone())
    }

    pub fn from_coords(field: &Arc<NumberField>, coords: &[Rational]) -> Self {
        assert!(coords.len() <= field.degree(), "too many coordinates");
        let den = common_denominator(coords);
        let num = coords
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        Self::raw(Some(field.clone()), num, den)
    }

    pub fn from_int_coords(field: &Arc<NumberField>, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut out = Self::raw(Some(field.clone()), num, den);
        out.reduce();
        out
    }

    /// Value of a rational polynomial at the field generator.
    pub fn from_poly(field: &Arc<NumberField>, p: &Poly<Rational>) -> Self {
        let r = p.rem(field.poly()).expect("monic modulus");
        Self::from_coords(field, r.coeffs())
    }

    fn raw(field: Option<Arc<NumberField>>, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -c.clone();
            }
        }
        while num.last().is_some_and(|c| c.is_zero()) {
            num.pop();
        }
        let mut out = AlgebraicNumber { field, num, den };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.num.is_empty() {
            self.den = BigInt::one();
            return;
        }
        let g = self.num.iter().fold(self.den.clone(), |g, c| g.gcd(c));
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    /// Reduce `num` modulo the defining polynomial.
    fn reduce(&mut self) {
        if let Some(field) = &self.field {
            reduce_int(&mut self.num, field.int_poly());
        }
        while self.num.last().is_some_and(|c| c.is_zero()) {
            self.num.pop();
        }
        self.normalize();
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    /// Degree of the ambient field (1 for Q).
    pub fn field_degree(&self) -> usize {
        self.field.as_ref().map_or(1, |f| f.degree())
    }

    /// Power-basis coordinates padded to the field degree.
    pub fn coords(&self) -> Vec<Rational> {
        (0..self.field_degree()).map(|i| self.coord(i)).collect()
    }

    pub fn coord(&self, i: usize) -> Rational {
        match self.num.get(i) {
            Some(c) => Rational::new(c.clone(), self.den.clone()),
            None => Rational::zero(),
        }
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_rational(&self) -> bool {
        self.num.len() <= 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coord(0))
    }

    /// The same value viewed in `field` (only valid for rationals or
    /// elements already in `field`).
    pub fn in_field(&self, field: &Arc<NumberField>) -> Result<Self> {
        match &self.field {
            Some(f) if f.same_as(field) => Ok(self.clone()),
            _ if self.is_rational() => Ok(Self::raw(Some(field.clone()), self.num.clone(), self.den.clone())),
            _ => Err(Error::FieldMismatch),
        }
    }

    fn common_field(&self, other: &Self) -> Result<Option<Arc<NumberField>>> {
        match (&self.field, &other.field) {
            (None, None) => Ok(None),
            (Some(f), None) | (None, Some(f)) => Ok(Some(f.clone())),
            (Some(f), Some(g)) => {
                if f.same_as(g) {
                    Ok(Some(f.clone()))
                } else if self.is_rational() {
                    Ok(Some(g.clone()))
                } else if other.is_rational() {
                    Ok(Some(f.clone()))
                } else {
                    Err(Error::FieldMismatch)
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let field = self.common_field(other)?;
        Ok(self.add_with(other, field, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let field = self.common_field(other)?;
        Ok(self.add_with(other, field, true))
    }

    fn add_with(&self, other: &Self, field: Option<Arc<NumberField>>, negate: bool) -> Self {
        let len = self.num.len().max(other.num.len());
        let num = if self.den == other.den {
            (0..len)
                .map(|i| {
                    let a = self.num.get(i).cloned().unwrap_or_default();
                    let b = other.num.get(i).cloned().unwrap_or_default();
                    if negate {
                        a - b
                    } else {
                        a + b
                    }
                })
                .collect::<Vec<_>>()
        } else {
            (0..len)
                .map(|i| {
                    let a = self.num.get(i).map(|c| c * &other.den).unwrap_or_default();
                    let b = other.num.get(i).map(|c| c * &self.den).unwrap_or_default();
                    if negate {
                        a - b
                    } else {
                        a + b
                    }
                })
                .collect()
        };
        let den = if self.den == other.den { self.den.clone() } else { &self.den * &other.den };
        Self::raw(field, num, den)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let field = self.common_field(other)?;
        if self.num.is_empty() || other.num.is_empty() {
            return Ok(Self::raw(field, Vec::new(), BigInt::one()));
        }
        let mut num = vec![BigInt::zero(); self.num.len() + other.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                num[i + j] += a * b;
            }
        }
        let mut out = AlgebraicNumber { field, num, den: &self.den * &other.den };
        out.reduce();
        Ok(out)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let inv = other.inverse()?;
        self.checked_mul(&inv)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.num.is_empty() {
            return Err(Error::DivisionByZero);
        }
        match &self.field {
            None => Ok(Self::raw(None, vec![self.den.clone()], self.num[0].clone())),
            Some(_) if self.is_rational() => Ok(Self::raw(
                self.field.clone(),
                vec![self.den.clone()],
                self.num[0].clone(),
            )),
            Some(field) => {
                let a = self.as_poly();
                let (g, s, _) = a.xgcd(field.poly());
                debug_assert!(g.degree() == Some(0));
                Ok(Self::from_coords(field, s.coeffs()))
            }
        }
    }

    /// The representative polynomial in the generator.
    pub fn as_poly(&self) -> Poly<Rational> {
        Poly::new((0..self.num.len()).map(|i| self.coord(i)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::raw(self.field.clone(), vec![BigInt::one()], BigInt::one());
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

    /// Matrix of multiplication by the numerator, columns are images of `t^j`.
    fn int_mult_matrix(&self) -> Vec<Vec<BigInt>> {
        let n = self.field_degree();
        let mut cur = self.num.clone();
        let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for j in 0..n {
            if j > 0 {
                cur.insert(0, BigInt::zero());
                if let Some(f) = &self.field {
                    reduce_int(&mut cur, f.int_poly());
                }
            }
            cols.push((0..n).map(|i| cur.get(i).cloned().unwrap_or_default()).collect());
        }
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Field norm to Q.
    pub fn norm(&self) -> Rational {
        let n = self.field_degree();
        let det = bareiss_det(self.int_mult_matrix());
        Rational::new(det, self.den.pow(n as u32))
    }

    pub fn trace(&self) -> Rational {
        let m = self.int_mult_matrix();
        let tr: BigInt = (0..m.len()).map(|i| m[i][i].clone()).sum();
        Rational::new(tr, self.den.clone())
    }
}

fn reduce_int(num: &mut Vec<BigInt>, f: &[BigInt]) {
    let n = f.len() - 1;
    if num.len() <= n {
        return;
    }
    for i in (n..num.len()).rev() {
        let c = std::mem::take(&mut num[i]);
        if c.is_zero() {
            continue;
        }
        for j in 0..n {
            num[i - n + j] -= &c * &f[j];
        }
    }
    num.truncate(n);
}

/// Determinant of an integer matrix by fraction-free elimination.
pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", super::rational::format_rational(&self.coord(0)));
        }
        let mut first = true;
        for i in (0..self.num.len()).rev() {
            let c = self.coord(i);
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", super::rational::format_rational(&c))?,
                1 => write!(f, "({})*t", super::rational::format_rational(&c))?,
                _ => write!(f, "({})*t^{i}", super::rational::format_rational(&c))?,
            }
        }
        Ok(())
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.num != other.num || self.den != other.den {
            return false;
        }
        if self.is_rational() {
            return true;
        }
        match (&self.field, &other.field) {
            (Some(f), Some(g)) => f.same_as(g),
            _ => false,
        }
    }
}

impl Zero for AlgebraicNumber {
    fn zero() -> Self {
        AlgebraicNumber { field: None, num: Vec::new(), den: BigInt::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
}

impl One for AlgebraicNumber {
    fn one() -> Self {
        AlgebraicNumber { field: None, num: vec![BigInt::one()], den: BigInt::one() }
    }
}

impl Neg for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(mut self) -> AlgebraicNumber {
        for c in self.num.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        -self.clone()
    }
}

// Operators panic on mixing elements of two different fields; use the
// `checked_*` methods where that can happen.
macro_rules! field_binop {
    ($tr:ident, $m:ident, $checked:ident, $atr:ident, $am:ident) => {
        impl $tr for &AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $m(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
                self.$checked(rhs).expect("algebraic numbers from different fields")
            }
        }
        impl $tr for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $m(self, rhs: AlgebraicNumber) -> AlgebraicNumber {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $atr<&'a AlgebraicNumber> for AlgebraicNumber {
            fn $am(&mut self, rhs: &'a AlgebraicNumber) {
                *self = (&*self).$m(rhs);
            }
        }
    };
}
field_binop!(Add, add, checked_add, AddAssign, add_assign);
field_binop!(Sub, sub, checked_sub, SubAssign, sub_assign);
field_binop!(Mul, mul, checked_mul, MulAssign, mul_assign);

impl Div for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn div(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
        self.checked_div(rhs).expect("division by zero or field mismatch")
    }
}

impl Div for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn div(self, rhs: AlgebraicNumber) -> AlgebraicNumber {
        &self / &rhs
    }
}

impl Scalar for AlgebraicNumber {
    fn from_rational(r: &Rational) -> Self {
        AlgebraicNumber::rational(r)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn try_inv(&self) -> Option<Self> {
        self.inverse().ok()
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::raw(self.field.clone(), Vec::new(), BigInt::one());
        }
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::raw(self.field.clone(), num, &self.den * r.denom())
    }

    fn as_rational(&self) -> Option<Rational> {
        self.to_rational()
    }

    fn compatible(&self, other: &Self) -> bool {
        self.common_field(other).is_ok()
    }
}

/// The arithmetic operation selector of [`nf_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field arithmetic that reports field mismatch and division by zero.
pub fn nf_arith(a: &AlgebraicNumber, b: &AlgebraicNumber, op: ArithOp) -> Result<AlgebraicNumber> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}
