//! Polynomials over a number field: factorization by norms and simple
//! extensions by a primitive element.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::field::{AlgebraicNumber, NumberField};
use super::linalg::solve_in_span;
use super::poly::Poly;
use super::zfactor::factor_rational;
use crate::scalar::Scalar;
use crate::{Error, Rational, Result};

pub fn lift_poly(g: &Poly<Rational>) -> Poly<AlgebraicNumber> {
    g.map(AlgebraicNumber::rational)
}

fn in_field_poly(g: &Poly<AlgebraicNumber>, field: &Arc<NumberField>) -> Result<Poly<AlgebraicNumber>> {
    Ok(Poly::new(g.coeffs().iter().map(|c| c.in_field(field)).collect::<Result<Vec<_>>>()?))
}

/// `Norm_{K/Q}(g(s - c*t))` as a rational polynomial in `s`, by evaluation
/// at integer points and interpolation.
fn shifted_norm(g: &Poly<AlgebraicNumber>, field: &Arc<NumberField>, c: i64) -> Poly<Rational> {
    let deg = g.degree().unwrap_or(0) * field.degree();
    let ct = field.generator().scale(&Rational::from_integer(c.into()));
    let xs: Vec<Rational> = (0..=deg as i64).map(|j| Rational::from_integer(j.into())).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| {
            let at = &AlgebraicNumber::rational(x) - &ct;
            g.eval(&at).in_field(field).expect("same field").norm()
        })
        .collect();
    interpolate(&xs, &ys)
}

/// Newton-form interpolation through `(xs[i], ys[i])`.
pub(crate) fn interpolate(xs: &[Rational], ys: &[Rational]) -> Poly<Rational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut out = Poly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        out = &(&out * &Poly::linear(xs[i].clone())) + &Poly::constant(dd[i].clone());
    }
    out
}

/// Distinct monic irreducible factors of `g` over `field`.
pub fn factor_over_field(g: &Poly<AlgebraicNumber>, field: &Arc<NumberField>) -> Result<Vec<Poly<AlgebraicNumber>>> {
    let g = in_field_poly(&g.monic()?, field)?;
    if g.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let sqfree = g.div_exact(&g.gcd(&g.derivative()))?;
    let t = field.generator();
    for c in 0i64..64 {
        let norm = shifted_norm(&sqfree, field, c);
        if !norm.is_squarefree() {
            continue;
        }
        let shift = Poly::new(vec![t.scale(&Rational::from_integer(c.into())), AlgebraicNumber::one()]);
        let mut out = Vec::new();
        for (h, _) in factor_rational(&norm) {
            let hk = lift_poly(&h).compose(&shift);
            let gi = sqfree.gcd(&hk);
            if gi.degree().unwrap_or(0) > 0 {
                out.push(gi);
            }
        }
        out.sort_by_key(|f| f.degree());
        return Ok(out);
    }
    Err(Error::InvalidArgument("no squarefree norm found".into()))
}

/// Roots in `field` of a rational polynomial, in a fixed order.
pub fn roots_in_field(g: &Poly<Rational>, field: &Arc<NumberField>) -> Result<Vec<AlgebraicNumber>> {
    roots_over_field(&lift_poly(g), field)
}

/// Roots in `field` of a polynomial over `field`, in a fixed order.
pub fn roots_over_field(g: &Poly<AlgebraicNumber>, field: &Arc<NumberField>) -> Result<Vec<AlgebraicNumber>> {
    let mut roots: Vec<AlgebraicNumber> = factor_over_field(g, field)?
        .into_iter()
        .filter(|f| f.degree() == Some(1))
        .map(|f| -f.coeff(0))
        .collect();
    roots.sort_by_cached_key(|r| r.coords());
    Ok(roots)
}

/// `L = K(beta)` with `beta` a root of an irreducible `g` over `K`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub field: Arc<NumberField>,
    /// Image of the generator of `K`.
    pub base_generator: AlgebraicNumber,
    pub root: AlgebraicNumber,
}

impl Extension {
    pub fn embed(&self, x: &AlgebraicNumber) -> AlgebraicNumber {
        match x.to_rational() {
            Some(r) => AlgebraicNumber::rational(&r).in_field(&self.field).expect("rational"),
            None => x.as_poly().map(AlgebraicNumber::rational).eval(&self.base_generator),
        }
    }
}

/// Builds `K(beta)` through the primitive element `theta = beta + c*t`
/// for the first small `c` that works. The minimal polynomial of `theta`
/// comes from linear dependence of its powers in the tower basis
/// `t^i beta^j`.
pub fn adjoin(base: &Arc<NumberField>, g: &Poly<AlgebraicNumber>) -> Result<Extension> {
    let g = in_field_poly(&g.monic()?, base)?;
    let n = base.degree();
    let m = g.degree().ok_or(Error::DivisionByZero)?;
    let total = n * m;
    let t = base.generator();
    let flatten = |e: &Poly<AlgebraicNumber>| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); total];
        for j in 0..m {
            let cj = e.coeff(j);
            for i in 0..n {
                v[i + n * j] = cj.coord(i);
            }
        }
        v
    };
    for c in 1i64..64 {
        let theta = Poly::new(vec![t.scale(&Rational::from_integer(c.into())), AlgebraicNumber::one()]);
        let mut powers = vec![Poly::one()];
        let mut vecs = vec![flatten(&powers[0])];
        let mut failed = false;
        for _ in 1..=total {
            let next = (&powers[powers.len() - 1] * &theta).rem(&g)?;
            let v = flatten(&next);
            if vecs.len() < total && solve_in_span(&vecs, &v).is_some() {
                failed = true;
                break;
            }
            vecs.push(v);
            powers.push(next);
        }
        if failed {
            continue;
        }
        let top = vecs.pop().expect("total + 1 vectors");
        let dep = solve_in_span(&vecs, &top).expect("full-rank basis spans");
        let mut mp: Vec<Rational> = dep.into_iter().map(|x| -x).collect();
        mp.push(Rational::one());
        let minpoly = Poly::new(mp);
        let (field, d) = NumberField::from_rational_poly(&minpoly)?;
        let theta_l = field.generator().scale(&Rational::new(1.into(), d));
        let express = |target: &Poly<AlgebraicNumber>| -> Result<AlgebraicNumber> {
            let coeffs = solve_in_span(&vecs, &flatten(target))
                .ok_or(Error::Inconsistent(0))?;
            Ok(Poly::new(coeffs).map(AlgebraicNumber::rational).eval(&theta_l))
        };
        let base_generator = express(&Poly::constant(t.clone()))?;
        let root = express(&Poly::x())?;
        return Ok(Extension { field, base_generator, root });
    }
    Err(Error::InvalidArgument("no primitive element found".into()))
}
