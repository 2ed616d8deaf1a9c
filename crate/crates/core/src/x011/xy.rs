//! Expansions of the Weierstrass coordinates at the cusp at infinity.

use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::ellcurve::{Chart, CurveFunction, WeierstrassCurve};
use crate::qseries::{EtaQuotient, LaurentSeries};
use crate::scalar::Scalar;
use crate::{Error, RatSeries, Rational, Result};

/// Series width: `w = q^(1/11)`.
pub const WIDTH: u32 = 11;

/// `y^2 + y = x^3 - x^2 - 10x - 20`.
pub fn curve() -> WeierstrassCurve<Rational> {
    WeierstrassCurve::from_i64([0, -1, 1, -10, -20]).expect("nonsingular")
}

/// The differential `eta(z)^2 eta(z/11)^2`.
pub fn differential() -> EtaQuotient {
    EtaQuotient::parse("1:2,1/11:2").expect("valid eta quotient")
}

/// `x(w)`, `y(w)` and the constant `kappa` in `D x = kappa (2y + 1) S`.
#[derive(Clone, Debug, PartialEq)]
pub struct XyExpansion {
    pub x: RatSeries,
    pub y: RatSeries,
    pub kappa: Rational,
}

static CACHE: Mutex<Option<XyExpansion>> = Mutex::new(None);

/// `x` and `y` to `truncation` terms each, solved order by order from the
/// curve equation and `D x = kappa (2y + 1) S` with `D = w d/dw`.
pub fn expand_xy(truncation: usize) -> Result<XyExpansion> {
    if truncation < 10 {
        return Err(Error::InvalidArgument("truncation must be at least 10".into()));
    }
    let mut cache = CACHE.lock().expect("cache lock");
    if let Some(c) = cache.as_ref() {
        if c.x.truncation() >= truncation {
            return Ok(XyExpansion { x: c.x.truncate(truncation), y: c.y.truncate(truncation), kappa: c.kappa.clone() });
        }
    }
    let out = solve_xy(truncation)?;
    check_relations(&out)?;
    *cache = Some(out.clone());
    Ok(out)
}

fn solve_xy(truncation: usize) -> Result<XyExpansion> {
    let e = curve();
    // S = w (1 + ...); s[i] holds the coefficient of w^(i+1).
    let s_series = differential().expand(WIDTH, truncation + 4)?;
    debug_assert_eq!(s_series.lead(), 1);
    let s: Vec<Rational> = s_series.coeffs().to_vec();
    let s_at = |e: i64| -> Rational {
        if e < 1 || (e - 1) as usize >= s.len() {
            Rational::zero()
        } else {
            s[(e - 1) as usize].clone()
        }
    };
    // xs[i] = x_{i-2}, ys[i] = y_{i-3}; x2[i] = (x^2)_{i-4}.
    let mut xs = vec![Rational::one()];
    let mut ys = vec![Rational::one()];
    let mut x2 = vec![Rational::one()];
    // Leading terms of D x = kappa (2y + 1) S at w^-2: -2 = 2 kappa s_1.
    let kappa = Rational::from_integer((-2).into()) / (Rational::from_integer(2.into()) * s_at(1));
    let xc = |xs: &Vec<Rational>, k: i64| -> Rational {
        let i = k + 2;
        if i < 0 || i as usize >= xs.len() {
            Rational::zero()
        } else {
            xs[i as usize].clone()
        }
    };
    let yc = |ys: &Vec<Rational>, k: i64| -> Rational {
        let i = k + 3;
        if i < 0 || i as usize >= ys.len() {
            Rational::zero()
        } else {
            ys[i as usize].clone()
        }
    };
    let x2c = |x2: &Vec<Rational>, k: i64| -> Rational {
        let i = k + 4;
        if i < 0 || i as usize >= x2.len() {
            Rational::zero()
        } else {
            x2[i as usize].clone()
        }
    };
    let two = Rational::from_integer(2.into());
    let three = Rational::from_integer(3.into());
    // Unknowns at step k: x_k and y_{k-1}, read as zero while forming residuals.
    let last = truncation as i64 - 2;
    for k in -1..=last {
        let m = k - 4;
        // D x - kappa (2y + 1) S at w^k, without x_k and y_{k-1}.
        let mut r1 = Rational::zero();
        for j in -3..=k - 2 {
            let mut c = &two * yc(&ys, j);
            if j == 0 {
                c += Rational::one();
            }
            r1 -= &kappa * c * s_at(k - j);
        }
        if k - 1 == 0 {
            r1 -= &kappa * s_at(1);
        }
        // y^2 + y - x^3 - a2 x^2 - a4 x - a6 at w^m, same convention.
        let mut y2 = Rational::zero();
        for a in -2..=k - 2 {
            y2 += yc(&ys, a) * yc(&ys, m - a);
        }
        // x^2 at w^(k-2), excluding the x_k x_{-2} pair.
        let mut x2_top = Rational::zero();
        for a in -1..=k - 1 {
            x2_top += xc(&xs, a) * xc(&xs, k - 2 - a);
        }
        let mut x3 = Rational::zero();
        for a in -4..=k - 3 {
            x3 += x2c(&x2, a) * xc(&xs, m - a);
        }
        x3 += &x2_top * xc(&xs, -2);
        let mut r2 = y2 + yc(&ys, m) - x3 - &e.a2 * x2c(&x2, m) - &e.a4 * xc(&xs, m);
        if m == 0 {
            r2 -= &e.a6;
        }
        // k x_k + c y_{k-1} + r1 = 0 and -3 x_k + 2 y_{k-1} + r2 = 0.
        let c = -&two * &kappa * s_at(1);
        let det = Rational::from_integer(k.into()) * &two + &three * &c;
        if det.is_zero() {
            return Err(Error::Inconsistent(k));
        }
        let xk = (-&two * &r1 + &c * &r2) / &det;
        let yk = (-Rational::from_integer(k.into()) * &r2 - &three * &r1) / &det;
        xs.push(xk.clone());
        ys.push(yk);
        x2.push(x2_top + &two * xk * xc(&xs, -2));
    }
    let x = LaurentSeries::new(WIDTH, -2, xs)?.truncate(truncation);
    let y = LaurentSeries::new(WIDTH, -3, ys)?.truncate(truncation);
    Ok(XyExpansion { x, y, kappa })
}

/// Recomputes both defining relations with series arithmetic.
fn check_relations(xy: &XyExpansion) -> Result<()> {
    let e = curve();
    let (x, y) = (&xy.x, &xy.y);
    let lhs = &(y * y) + y;
    let curve_gap = &lhs - &x.eval_poly(&e.r_poly());
    if let Some(i) = curve_gap.coeffs().iter().position(|c| !c.is_zero()) {
        return Err(Error::Inconsistent(curve_gap.lead() + i as i64));
    }
    let s = differential().expand(WIDTH, x.truncation() + 4)?;
    let dy = &(y.scale(&Rational::from_integer(2.into()))) + &LaurentSeries::one(WIDTH, y.truncation() + 3);
    let ode_gap = &x.derivation_wdw() - &(&dy * &s).scale(&xy.kappa);
    if let Some(i) = ode_gap.coeffs().iter().position(|c| !c.is_zero()) {
        return Err(Error::Inconsistent(ode_gap.lead() + i as i64));
    }
    Ok(())
}

/// The chart at the cusp at infinity given by `w` itself.
#[derive(Clone, Copy, Debug, Default)]
pub struct CuspChart;

impl<K: Scalar> Chart<K> for CuspChart {
    fn coordinates(&self, terms: usize) -> Result<(LaurentSeries<K>, LaurentSeries<K>)> {
        let xy = expand_xy(terms.max(10))?;
        Ok((xy.x.map(K::from_rational), xy.y.map(K::from_rational)))
    }
}

/// `F(x(w), y(w))` to `truncation` terms from its leading term.
pub fn expand_on_curve<K: Scalar>(f: &CurveFunction<K>, truncation: usize) -> Result<LaurentSeries<K>> {
    let deg = f.u().deg_i64().max(f.v().deg_i64() + 2).max(f.denominator().deg_i64()).max(0) as usize;
    let mut margin = 3 * deg + 6;
    loop {
        let (x, y) = CuspChart.coordinates(truncation + margin)?;
        let s = f.eval_series(&x, &y)?;
        if s.truncation() >= truncation {
            return Ok(s.truncate(truncation));
        }
        if margin > 4 * (truncation + 16) {
            return Err(Error::TruncationShortfall { wanted: truncation, available: s.truncation() });
        }
        margin *= 2;
    }
}
