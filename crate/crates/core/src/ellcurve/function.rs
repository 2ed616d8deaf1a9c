//! Functions `(u(x) + v(x) y) / d(x)` on a Weierstrass curve.

use super::curve::{CurvePoint, WeierstrassCurve};
use crate::exactnum::Poly;
use crate::qseries::LaurentSeries;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// `(u + v y) / d` with `y^2` eliminated through the curve equation.
///
/// Canonical form: `d` monic and `gcd(u, v, d) = 1`. Since `{1, y}` is a
/// basis of the function field over `K(x)`, equal functions have equal
/// canonical forms.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveFunction<K> {
    u: Poly<K>,
    v: Poly<K>,
    d: Poly<K>,
}

impl<K: Scalar> CurveFunction<K> {
    pub fn new(u: Poly<K>, v: Poly<K>, d: Poly<K>) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut f = CurveFunction { u, v, d };
        f.canonicalize();
        Ok(f)
    }

    pub fn polynomial(u: Poly<K>, v: Poly<K>) -> Self {
        Self::new(u, v, Poly::one()).expect("unit denominator")
    }

    pub fn constant(c: K) -> Self {
        Self::polynomial(Poly::constant(c), Poly::zero())
    }

    pub fn x() -> Self {
        Self::polynomial(Poly::x(), Poly::zero())
    }

    pub fn y() -> Self {
        Self::polynomial(Poly::zero(), Poly::one())
    }

    fn canonicalize(&mut self) {
        if self.u.is_zero() && self.v.is_zero() {
            self.d = Poly::one();
            return;
        }
        let g = self.u.gcd(&self.v).gcd(&self.d);
        if g.degree().unwrap_or(0) > 0 {
            self.u = self.u.div_exact(&g).expect("gcd divides");
            self.v = self.v.div_exact(&g).expect("gcd divides");
            self.d = self.d.div_exact(&g).expect("gcd divides");
        }
        let lc = self.d.lead().expect("nonzero").clone();
        if !lc.is_one() {
            let inv = lc.try_inv().expect("nonzero");
            self.u = self.u.scale(&inv);
            self.v = self.v.scale(&inv);
            self.d = self.d.scale(&inv);
        }
    }

    pub fn u(&self) -> &Poly<K> {
        &self.u
    }

    pub fn v(&self) -> &Poly<K> {
        &self.v
    }

    pub fn denominator(&self) -> &Poly<K> {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// Whether the function is a polynomial in `x` and `y`.
    pub fn is_polynomial(&self) -> bool {
        self.d.degree() == Some(0)
    }

    pub fn mul(&self, other: &Self, curve: &WeierstrassCurve<K>) -> Self {
        let (r, s) = (curve.r_poly(), curve.s_poly());
        let vv = &self.v * &other.v;
        let u = &(&self.u * &other.u) + &(&vv * &r);
        let v = &(&(&self.u * &other.v) + &(&self.v * &other.u)) + &(&vv * &s);
        Self::new(u, v, &self.d * &other.d).expect("nonzero denominators")
    }

    /// Norm down to `K(x)` of a polynomial function.
    pub fn norm_to_x(&self, curve: &WeierstrassCurve<K>) -> Poly<K> {
        let d = self.d.coeff(0).try_inv().expect("nonzero");
        self.numerator_norm(curve).scale(&d.mul_ref(&d))
    }

    /// `u^2 + u v S - v^2 R`, the norm of `u + v y` down to `K(x)`.
    fn numerator_norm(&self, curve: &WeierstrassCurve<K>) -> Poly<K> {
        let (r, s) = (curve.r_poly(), curve.s_poly());
        &(&(&self.u * &self.u) + &(&(&self.u * &self.v) * &s)) - &(&(&self.v * &self.v) * &r)
    }

    pub fn div(&self, other: &Self, curve: &WeierstrassCurve<K>) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Multiply through by the conjugate u + v (S - y).
        let s = curve.s_poly();
        let conj = CurveFunction {
            u: &other.u + &(&other.v * &s),
            v: -&other.v,
            d: Poly::one(),
        };
        let top = self.mul(&conj, curve);
        let norm = other.numerator_norm(curve);
        Self::new(&top.u * &other.d, &top.v * &other.d, &top.d * &norm)
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::new(self.u.scale(c), self.v.scale(c), self.d.clone()).expect("nonzero denominator")
    }

    /// Value at an affine point, `None` when the denominator vanishes there.
    pub fn eval(&self, x: &K, y: &K) -> Option<K> {
        let den = self.d.eval(x);
        if den.is_zero() {
            return None;
        }
        Some((self.u.eval(x) + self.v.eval(x).mul_ref(y)) / den)
    }

    /// `F(x, y)` for series `x`, `y` in a common local parameter.
    pub fn eval_series(&self, x: &LaurentSeries<K>, y: &LaurentSeries<K>) -> Result<LaurentSeries<K>> {
        let num = x.eval_poly(&self.u).checked_add(&x.eval_poly(&self.v).checked_mul(y)?)?;
        if self.is_polynomial() {
            return Ok(num.scale(&self.d.coeff(0).try_inv().expect("nonzero")));
        }
        num.checked_div(&x.eval_poly(&self.d))
    }

    /// Pole order at `O` and the leading coefficient against a uniformizer
    /// in which `x = t^-2 + ...` and `y = t^-3 + ...`.
    pub fn leading_at_infinity(&self) -> Option<(i64, K)> {
        if self.is_zero() {
            return None;
        }
        let du = self.u.degree().map(|d| 2 * d as i64);
        let dv = self.v.degree().map(|d| 2 * d as i64 + 3);
        let dd = 2 * self.d.degree().expect("nonzero") as i64;
        let (order, lc) = match (du, dv) {
            (Some(a), Some(b)) if a > b => (a, self.u.lead().cloned()),
            (Some(_), Some(b)) => (b, self.v.lead().cloned()),
            (Some(a), None) => (a, self.u.lead().cloned()),
            (None, Some(b)) => (b, self.v.lead().cloned()),
            (None, None) => unreachable!(),
        };
        Some((order - dd, lc.expect("nonzero")))
    }

    /// Rescaled so the leading coefficient at `O` is one.
    pub fn normalized_at_infinity(&self) -> Self {
        match self.leading_at_infinity() {
            Some((_, lc)) => self.scale(&lc.try_inv().expect("nonzero")),
            None => self.clone(),
        }
    }
}

/// Line through `p` and `q`, and the vertical line through `p + q`; both
/// are returned as functions so that `f_{i+j} = f_i f_j line / vertical`.
fn line_functions<K: Scalar>(
    curve: &WeierstrassCurve<K>,
    p: &CurvePoint<K>,
    q: &CurvePoint<K>,
) -> (CurveFunction<K>, CurveFunction<K>) {
    let one = CurveFunction::constant(K::one());
    let (Some(pp), Some(qq)) = (p.coords(), q.coords()) else {
        return (one.clone(), one);
    };
    let sum = curve.add(p, q);
    let vertical = match sum.coords() {
        Some((x3, _)) => CurveFunction::polynomial(Poly::linear(x3.clone()), Poly::zero()),
        None => one,
    };
    let line = match curve.slope(pp, qq) {
        // y - y1 - l (x - x1)
        Some(l) => CurveFunction::polynomial(
            Poly::new(vec![l.mul_ref(pp.0) - pp.1.clone(), -l]),
            Poly::one(),
        ),
        None => CurveFunction::polynomial(Poly::linear(pp.0.clone()), Poly::zero()),
    };
    (line, vertical)
}

/// Function with divisor `n (P) - n (O)` for an `n`-torsion point `P`, built
/// by double-and-add accumulation of line functions and normalized to
/// leading coefficient one at `O`.
pub fn function_with_divisor<K: Scalar>(
    curve: &WeierstrassCurve<K>,
    n: u64,
    p: &CurvePoint<K>,
) -> Result<CurveFunction<K>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if !curve.contains(p) {
        return Err(Error::NotOnCurve);
    }
    // Invariant: div f = k (P) - (kP) - (k - 1)(O).
    let mut f = CurveFunction::constant(K::one());
    let mut kp = p.clone();
    let bits = 64 - n.leading_zeros();
    for i in (0..bits - 1).rev() {
        let (l, v) = line_functions(curve, &kp, &kp);
        f = f.mul(&f, curve).mul(&l, curve).div(&v, curve)?;
        kp = curve.double(&kp);
        if (n >> i) & 1 == 1 {
            let (l, v) = line_functions(curve, &kp, p);
            f = f.mul(&l, curve).div(&v, curve)?;
            kp = curve.add(&kp, p);
        }
    }
    if !kp.is_infinity() {
        return Err(Error::NotTorsion(n));
    }
    Ok(f.normalized_at_infinity())
}
