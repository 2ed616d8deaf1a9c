//! Division polynomials and x-loci of torsion points.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::curve::{CurvePoint, WeierstrassCurve};
use crate::exactnum::nfpoly::{lift_poly, roots_in_field};
use crate::exactnum::{zfactor, AlgebraicNumber, NumberField, Poly};
use crate::scalar::Scalar;
use crate::{Error, Rational, Result};

/// `f_n` with `psi_n = f_n` for odd `n` and `psi_n = psi_2 f_n` for even `n`,
/// as a polynomial in `x` (`psi_2 = 2y + a1 x + a3`).
pub fn division_polynomial<K: Scalar>(curve: &WeierstrassCurve<K>, n: u32) -> Poly<K> {
    let mut memo = HashMap::new();
    divpoly_rec(curve, n, &mut memo)
}

fn divpoly_rec<K: Scalar>(c: &WeierstrassCurve<K>, n: u32, memo: &mut HashMap<u32, Poly<K>>) -> Poly<K> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let k = |v: i64| K::from_i64(v);
    let (b2, b4, b6, b8) = (c.b2(), c.b4(), c.b6(), c.b8());
    let out = match n {
        0 => Poly::zero(),
        1 | 2 => Poly::one(),
        3 => Poly::new(vec![
            b8.clone(),
            b6.mul_ref(&k(3)),
            b4.mul_ref(&k(3)),
            b2.clone(),
            k(3),
        ]),
        4 => Poly::new(vec![
            b4.mul_ref(&b8) - b6.mul_ref(&b6),
            b2.mul_ref(&b8) - b4.mul_ref(&b6),
            b8.mul_ref(&k(10)),
            b6.mul_ref(&k(10)),
            b4.mul_ref(&k(5)),
            b2.clone(),
            k(2),
        ]),
        _ => {
            // psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
            let big_f = Poly::new(vec![b6.clone(), b4.mul_ref(&k(2)), b2.clone(), k(4)]);
            let f2 = &big_f * &big_f;
            let m = n / 2;
            let mut g = |i: u32| divpoly_rec(c, i, memo);
            if n % 2 == 1 {
                let (fm2, fm, fm1, fp1) = (g(m + 2), g(m), g(m - 1), g(m + 1));
                let a = &fm2 * &fm.pow(3);
                let b = &fm1 * &fp1.pow(3);
                if m.is_multiple_of(2) {
                    &(&f2 * &a) - &b
                } else {
                    &a - &(&f2 * &b)
                }
            } else {
                let (fm, fm2, fm1, fmm2, fp1) = (g(m), g(m + 2), g(m - 1), g(m - 2), g(m + 1));
                &fm * &(&(&fm2 * &fm1.pow(2)) - &(&fmm2 * &fp1.pow(2)))
            }
        }
    };
    memo.insert(n, out.clone());
    out
}

/// Factored x-locus of the nonzero `n`-torsion.
#[derive(Clone, Debug, PartialEq)]
pub struct TorsionLocus {
    pub n: u32,
    /// Monic polynomial whose roots are the x-coordinates.
    pub polynomial: Poly<Rational>,
    /// Monic irreducible factors, by degree.
    pub factors: Vec<Poly<Rational>>,
}

impl TorsionLocus {
    pub fn rational_x(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> =
            self.factors.iter().filter(|f| f.degree() == Some(1)).map(|f| -f.coeff(0)).collect();
        out.sort();
        out
    }

    pub fn irrational_factors(&self) -> Vec<&Poly<Rational>> {
        self.factors.iter().filter(|f| f.degree().unwrap_or(0) > 1).collect()
    }
}

/// x-locus of the nonzero `n`-torsion for `n` in {2, 5}.
pub fn torsion_x_locus(curve: &WeierstrassCurve<Rational>, n: u32) -> Result<TorsionLocus> {
    let poly = match n {
        2 => {
            let (b2, b4, b6) = (curve.b2(), curve.b4(), curve.b6());
            Poly::new(vec![b6, b4 * Rational::from_integer(2.into()), b2, Rational::from_integer(4.into())])
        }
        5 => division_polynomial(curve, 5),
        _ => return Err(Error::UnsupportedTorsion(n as u64)),
    };
    let polynomial = poly.monic()?;
    let factors = zfactor::factor_rational(&polynomial).into_iter().map(|(f, _)| f).collect();
    Ok(TorsionLocus { n, polynomial, factors })
}

/// Points over `field` with x-coordinate a root of `g`, both signs of `y`.
pub fn points_over(
    curve: &WeierstrassCurve<Rational>,
    g: &Poly<Rational>,
    field: &Arc<NumberField>,
) -> Result<Vec<CurvePoint<AlgebraicNumber>>> {
    let e = curve.map(AlgebraicNumber::rational);
    let mut out = Vec::new();
    for x in roots_in_field(g, field)? {
        // y^2 - S(x) y - R(x) = 0.
        let s = e.s_poly().eval(&x);
        let r = e.r_poly().eval(&x);
        let quad = Poly::new(vec![-r, -s, AlgebraicNumber::one()]);
        for y in crate::exactnum::nfpoly::roots_over_field(&quad, field)? {
            out.push(CurvePoint::Affine { x: x.clone(), y });
        }
    }
    Ok(out)
}

/// Irreducible factor of the 5-locus containing `x(anchor + Q)` for the
/// points `Q` of the order-5 subgroup cut out by `subgroup`.
pub fn coset_x_locus(
    curve: &WeierstrassCurve<Rational>,
    locus: &TorsionLocus,
    subgroup: &Poly<Rational>,
    anchor: &CurvePoint<Rational>,
) -> Result<Poly<Rational>> {
    let e = curve.map(AlgebraicNumber::rational);
    for h in locus.irrational_factors() {
        if h == subgroup {
            continue;
        }
        let field = NumberField::from_rational_poly(h)?.0;
        let qs = points_over(curve, subgroup, &field)?;
        let Some(q) = qs.first() else {
            continue;
        };
        let a = match anchor {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => {
                CurvePoint::Affine { x: AlgebraicNumber::rational(x), y: AlgebraicNumber::rational(y) }
            }
        };
        if let CurvePoint::Affine { x, .. } = e.add(&a, q) {
            if lift_poly(h).eval(&x).is_zero() {
                return Ok(h.clone());
            }
        }
    }
    Err(Error::TorsionStructure("no factor contains the coset".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, rat};

    fn e11() -> WeierstrassCurve<Rational> {
        WeierstrassCurve::from_i64([0, -1, 1, -10, -20]).unwrap()
    }

    #[test]
    fn two_torsion_cubic() {
        let l = torsion_x_locus(&e11(), 2).unwrap();
        assert_eq!(l.polynomial, Poly::new(vec![rat(-79, 4), int(-10), int(-1), int(1)]));
        assert_eq!(l.factors.len(), 1);
        assert!(matches!(torsion_x_locus(&e11(), 3), Err(Error::UnsupportedTorsion(3))));
    }

    #[test]
    fn division_polynomials_vanish_on_torsion() {
        let e = e11();
        let f5 = division_polynomial(&e, 5);
        assert_eq!(f5.degree(), Some(12));
        assert_eq!(f5.lead(), Some(&int(5)));
        assert!(f5.eval(&int(5)).is_zero());
        assert!(f5.eval(&int(16)).is_zero());
        // f_10 = psi_10 / psi_2 also vanishes on the 5-torsion, and f_n for
        // n = 6..9 does not.
        assert!(division_polynomial(&e, 10).eval(&int(5)).is_zero());
        for n in 6..10 {
            assert!(!division_polynomial(&e, n).eval(&int(5)).is_zero(), "n = {n}");
        }
    }

    #[test]
    fn five_torsion_factors() {
        let l = torsion_x_locus(&e11(), 5).unwrap();
        assert_eq!(l.rational_x(), vec![int(5), int(16)]);
        let degs: Vec<usize> = l.factors.iter().map(|f| f.degree().unwrap()).collect();
        assert_eq!(degs, vec![1, 1, 2, 4, 4]);
        assert!(l.factors.contains(&Poly::from_i64(&[101, 41, 11, 1, 1])));
        assert!(l.factors.contains(&Poly::from_i64(&[155, 200, 120, 15, 1])));
    }
}
