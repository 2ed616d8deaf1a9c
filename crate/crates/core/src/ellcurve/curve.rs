//! Long Weierstrass curves and their group law.

use crate::exactnum::Poly;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassCurve<K> {
    pub a1: K,
    pub a2: K,
    pub a3: K,
    pub a4: K,
    pub a6: K,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CurvePoint<K> {
    Infinity,
    Affine { x: K, y: K },
}

impl<K> CurvePoint<K> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn coords(&self) -> Option<(&K, &K)> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, y } => Some((x, y)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointOp {
    Add,
    Negate,
    Double,
    ScalarMul(i64),
}

fn k<K: Scalar>(n: i64) -> K {
    K::from_i64(n)
}

impl<K: Scalar> WeierstrassCurve<K> {
    pub fn new(a1: K, a2: K, a3: K, a4: K, a6: K) -> Result<Self> {
        let c = WeierstrassCurve { a1, a2, a3, a4, a6 };
        if c.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    pub fn from_i64(a: [i64; 5]) -> Result<Self> {
        Self::new(k(a[0]), k(a[1]), k(a[2]), k(a[3]), k(a[4]))
    }

    pub fn map<L: Scalar>(&self, f: impl Fn(&K) -> L) -> WeierstrassCurve<L> {
        WeierstrassCurve { a1: f(&self.a1), a2: f(&self.a2), a3: f(&self.a3), a4: f(&self.a4), a6: f(&self.a6) }
    }

    pub fn b2(&self) -> K {
        self.a1.mul_ref(&self.a1) + self.a2.mul_ref(&k(4))
    }

    pub fn b4(&self) -> K {
        self.a4.mul_ref(&k(2)) + self.a1.mul_ref(&self.a3)
    }

    pub fn b6(&self) -> K {
        self.a3.mul_ref(&self.a3) + self.a6.mul_ref(&k(4))
    }

    pub fn b8(&self) -> K {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        a1.mul_ref(a1).mul_ref(a6) + a2.mul_ref(a6).mul_ref(&k(4)) - a1.mul_ref(a3).mul_ref(a4)
            + a2.mul_ref(a3).mul_ref(a3)
            - a4.mul_ref(a4)
    }

    pub fn discriminant(&self) -> K {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        -b2.mul_ref(&b2).mul_ref(&b8) - b4.mul_ref(&b4).mul_ref(&b4).mul_ref(&k(8))
            - b6.mul_ref(&b6).mul_ref(&k(27))
            + b2.mul_ref(&b4).mul_ref(&b6).mul_ref(&k(9))
    }

    /// `R(x) = x^3 + a2 x^2 + a4 x + a6`.
    pub fn r_poly(&self) -> Poly<K> {
        Poly::new(vec![self.a6.clone(), self.a4.clone(), self.a2.clone(), K::one()])
    }

    /// `S(x) = -(a1 x + a3)`, so that `y^2 = R(x) + S(x) y` on the curve.
    pub fn s_poly(&self) -> Poly<K> {
        Poly::new(vec![-self.a3.clone(), -self.a1.clone()])
    }

    /// `y^2 + a1 xy + a3 y - R(x)`.
    pub fn equation_at(&self, x: &K, y: &K) -> K {
        let lhs = y.mul_ref(y) + self.a1.mul_ref(x).mul_ref(y) + self.a3.mul_ref(y);
        lhs - self.r_poly().eval(x)
    }

    /// `2y + a1 x + a3`, the partial derivative in `y`.
    pub fn dy_at(&self, x: &K, y: &K) -> K {
        y.mul_ref(&k(2)) + self.a1.mul_ref(x) + self.a3.clone()
    }

    /// `a1 y - 3x^2 - 2 a2 x - a4`, the partial derivative in `x`.
    pub fn dx_at(&self, x: &K, y: &K) -> K {
        self.a1.mul_ref(y) - x.mul_ref(x).mul_ref(&k(3)) - self.a2.mul_ref(x).mul_ref(&k(2)) - self.a4.clone()
    }

    pub fn contains(&self, p: &CurvePoint<K>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => self.equation_at(x, y).is_zero(),
        }
    }

    pub fn point(&self, x: K, y: K) -> Result<CurvePoint<K>> {
        let p = CurvePoint::Affine { x, y };
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(Error::NotOnCurve)
        }
    }

    pub fn neg(&self, p: &CurvePoint<K>) -> CurvePoint<K> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: -y.clone() - self.a1.mul_ref(x) - self.a3.clone(),
            },
        }
    }

    /// Slope of the chord or tangent through `p` and `q`, `None` when the
    /// line is vertical.
    pub fn slope(&self, p: (&K, &K), q: (&K, &K)) -> Option<K> {
        let (x1, y1) = p;
        let (x2, y2) = q;
        if x1 != x2 {
            return Some((y2.clone() - y1.clone()) / (x2.clone() - x1.clone()));
        }
        if y1 != y2 {
            return None;
        }
        let den = self.dy_at(x1, y1);
        if den.is_zero() {
            return None;
        }
        let num = x1.mul_ref(x1).mul_ref(&k(3)) + self.a2.mul_ref(x1).mul_ref(&k(2)) + self.a4.clone()
            - self.a1.mul_ref(y1);
        Some(num / den)
    }

    pub fn add(&self, p: &CurvePoint<K>, q: &CurvePoint<K>) -> CurvePoint<K> {
        let (Some(pp), Some(qq)) = (p.coords(), q.coords()) else {
            return if p.is_infinity() { q.clone() } else { p.clone() };
        };
        let Some(l) = self.slope(pp, qq) else {
            return CurvePoint::Infinity;
        };
        let (x1, y1) = pp;
        let x3 = l.mul_ref(&l) + self.a1.mul_ref(&l) - self.a2.clone() - x1.clone() - qq.0.clone();
        let y3 = y1.clone() + l.mul_ref(&(x3.clone() - x1.clone()));
        // (x3, y3) is the third intersection; the sum is its negative.
        self.neg(&CurvePoint::Affine { x: x3, y: y3 })
    }

    pub fn double(&self, p: &CurvePoint<K>) -> CurvePoint<K> {
        self.add(p, p)
    }

    pub fn mul(&self, p: &CurvePoint<K>, n: i64) -> CurvePoint<K> {
        let base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.double(&b);
            }
        }
        acc
    }

    pub fn point_op(&self, a: &CurvePoint<K>, b: &CurvePoint<K>, op: PointOp) -> CurvePoint<K> {
        match op {
            PointOp::Add => self.add(a, b),
            PointOp::Negate => self.neg(a),
            PointOp::Double => self.double(a),
            PointOp::ScalarMul(n) => self.mul(a, n),
        }
    }

    /// Least `k <= bound` with `k p = O`.
    pub fn point_order(&self, p: &CurvePoint<K>, bound: u64) -> Option<u64> {
        let mut acc = p.clone();
        for k in 1..=bound {
            if acc.is_infinity() {
                return Some(k);
            }
            acc = self.add(&acc, p);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::int;
    use crate::Rational;

    fn e11() -> WeierstrassCurve<Rational> {
        WeierstrassCurve::from_i64([0, -1, 1, -10, -20]).unwrap()
    }

    #[test]
    fn invariants() {
        let e = e11();
        assert_eq!(e.discriminant(), int(-161051));
        assert_eq!((e.b2(), e.b4(), e.b6()), (int(-4), int(-20), int(-79)));
        assert!(matches!(WeierstrassCurve::<Rational>::from_i64([0, 0, 0, 0, 0]), Err(Error::SingularCurve)));
    }

    #[test]
    fn five_torsion() {
        let e = e11();
        let p = e.point(int(5), int(5)).unwrap();
        assert_eq!(e.mul(&p, 3), e.point(int(16), int(60)).unwrap());
        assert!(e.mul(&p, 5).is_infinity());
        assert_eq!(e.add(&p, &CurvePoint::Infinity), p);
        assert_eq!(e.point_order(&p, 10), Some(5));
        assert_eq!(e.point_order(&e.mul(&p, 3), 10), Some(5));
        assert_eq!(e.point_order(&CurvePoint::Infinity, 10), Some(1));
        assert_eq!(e.point_order(&p, 4), None);
        assert_eq!(e.point_op(&p, &p, PointOp::Negate), e.mul(&p, 4));
        assert!(e.point(int(0), int(0)).is_err());
    }
}
