//! Independent checks that a function has divisor `n (P) - n (O)`.

use super::curve::{CurvePoint, WeierstrassCurve};
use super::function::CurveFunction;
use crate::exactnum::Poly;
use crate::qseries::LaurentSeries;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Laurent expansions of `x` and `y` at `O` in a uniformizer `t` with
/// `x = t^-2 + ...` and `y = t^-3 + ...`.
pub trait Chart<K: Scalar> {
    /// `x(t)` and `y(t)`, each with at least `terms` coefficients.
    fn coordinates(&self, terms: usize) -> Result<(LaurentSeries<K>, LaurentSeries<K>)>;
}

/// The formal-group chart: `t = x / y` up to sign, with `w = -1/y` solved
/// from its fixed-point equation.
#[derive(Clone, Debug)]
pub struct FormalGroupChart<K> {
    curve: WeierstrassCurve<K>,
}

impl<K: Scalar> FormalGroupChart<K> {
    pub fn new(curve: WeierstrassCurve<K>) -> Self {
        FormalGroupChart { curve }
    }
}

impl<K: Scalar> Chart<K> for FormalGroupChart<K> {
    fn coordinates(&self, terms: usize) -> Result<(LaurentSeries<K>, LaurentSeries<K>)> {
        let c = &self.curve;
        let prec = terms as i64 + 3;
        let mono = |coef: K, e: i64| LaurentSeries::monomial(1, coef, e, (prec - e).max(0) as usize);
        let t = mono(K::one(), 1);
        let neg_t = mono(-K::one(), 1);
        let t2 = mono(K::one(), 2);
        // With z = -t: w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3.
        let z3 = mono(-K::one(), 3);
        let mut w = z3.clone();
        for _ in 0..prec {
            let w2 = &w * &w;
            let w3 = &w2 * &w;
            let lin = &(&neg_t.scale(&c.a1) + &t2.scale(&c.a2)) * &w;
            let quad = &(&LaurentSeries::one(1, prec as usize).scale(&c.a3) + &neg_t.scale(&c.a4)) * &w2;
            let next = &(&(&z3 + &lin) + &quad) + &w3.scale(&c.a6);
            let next = next.with_precision(prec);
            if next == w {
                break;
            }
            w = next;
        }
        let inv = w.invert()?;
        let x = -&(&t * &inv);
        let y = -&inv;
        Ok((x, y))
    }
}

/// Outcome of [`verify_divisor`].
#[derive(Clone, Debug, PartialEq)]
pub struct DivisorCheck<K> {
    pub expected: u64,
    /// Pole order at `O`, from the chart expansion.
    pub pole_order: i64,
    /// `F(P)`, `None` when the denominator vanishes at `P`.
    pub value_at_point: Option<K>,
    /// `ord_P F` from a local parameterization.
    pub local_order: i64,
    /// Whether `F` lies in `K[x, y]`, so that `O` is its only pole.
    pub polynomial: bool,
}

impl<K: Scalar> DivisorCheck<K> {
    pub fn pole_order_ok(&self) -> bool {
        self.pole_order == self.expected as i64
    }

    pub fn vanishes_at_point(&self) -> bool {
        self.value_at_point.as_ref().is_some_and(|v| v.is_zero())
    }

    pub fn local_order_ok(&self) -> bool {
        self.local_order == self.expected as i64
    }

    pub fn passed(&self) -> bool {
        self.pole_order_ok() && self.vanishes_at_point() && self.local_order_ok() && self.polynomial
    }
}

pub fn default_local_terms(n: u64) -> usize {
    n as usize + 5
}

/// Runs the divisor checks for the claim `div F = n (P) - n (O)`.
pub fn verify_divisor<K: Scalar>(
    curve: &WeierstrassCurve<K>,
    f: &CurveFunction<K>,
    n: u64,
    p: &CurvePoint<K>,
    chart: &dyn Chart<K>,
    local_terms: usize,
) -> Result<DivisorCheck<K>> {
    let Some((xp, yp)) = p.coords() else {
        return Err(Error::InvalidArgument("point must be affine".into()));
    };
    if !curve.contains(p) {
        return Err(Error::NotOnCurve);
    }
    if f.is_zero() {
        return Err(Error::ZeroSeries);
    }
    let (x, y) = chart.coordinates(local_terms.max(8))?;
    let at_o = f.eval_series(&x, &y)?;
    if at_o.is_zero() {
        return Err(Error::LocalPrecision(local_terms));
    }
    let (lx, ly) = local_parameterization(curve, xp, yp, local_terms);
    let num = truncated(&(&f.u().compose(&lx) + &(&f.v().compose(&lx) * &ly)), local_terms);
    let den = truncated(&f.denominator().compose(&lx), local_terms);
    let ord = |p: &Poly<K>| p.coeffs().iter().position(|c| !c.is_zero());
    let (Some(on), Some(od)) = (ord(&num), ord(&den)) else {
        return Err(Error::LocalPrecision(local_terms));
    };
    Ok(DivisorCheck {
        expected: n,
        pole_order: -at_o.lead(),
        value_at_point: f.eval(xp, yp),
        local_order: on as i64 - od as i64,
        polynomial: f.is_polynomial(),
    })
}

fn truncated<K: Scalar>(p: &Poly<K>, terms: usize) -> Poly<K> {
    Poly::new(p.coeffs().iter().take(terms).cloned().collect())
}

/// `(x(t), y(t))` through `(xp, yp)` to `terms` coefficients: `x = xp + t`
/// when `dG/dy` is nonzero there, and `y = yp + t` otherwise.
pub fn local_parameterization<K: Scalar>(
    curve: &WeierstrassCurve<K>,
    xp: &K,
    yp: &K,
    terms: usize,
) -> (Poly<K>, Poly<K>) {
    let dy = curve.dy_at(xp, yp);
    let by_x = !dy.is_zero();
    // G(x, y) = y^2 + a1 x y + a3 y - (x^3 + a2 x^2 + a4 x + a6).
    let g = |x: &Poly<K>, y: &Poly<K>| -> Poly<K> {
        let cst = |c: &K| Poly::constant(c.clone());
        let lhs = &(&(y * y) + &(&(&cst(&curve.a1) * x) * y)) + &(&cst(&curve.a3) * y);
        let r = curve.r_poly().compose(x);
        truncated(&(&lhs - &r), terms)
    };
    let param = Poly::new(vec![K::zero(), K::one()]);
    let (fixed, mut free) = if by_x {
        (&Poly::constant(xp.clone()) + &param, Poly::constant(yp.clone()))
    } else {
        (&Poly::constant(yp.clone()) + &param, Poly::constant(xp.clone()))
    };
    // Derivative of G in the free variable.
    let d = if by_x { dy } else { curve.dx_at(xp, yp) };
    let d_inv = d.try_inv().expect("smooth point");
    for k in 1..terms {
        let val = if by_x { g(&fixed, &free) } else { g(&free, &fixed) };
        let c = -val.coeff(k).mul_ref(&d_inv);
        free = &free + &Poly::monomial(c, k);
    }
    if by_x {
        (fixed, free)
    } else {
        (free, fixed)
    }
}
