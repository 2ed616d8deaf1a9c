//! `G_5 = (eta(z/11)/eta(z))^12` and its roots.

use super::xy::WIDTH;
use crate::qseries::EtaQuotient;
use crate::{RatSeries, Rational, Result};

pub fn g5_quotient() -> EtaQuotient {
    EtaQuotient::parse("1/11:12,1:-12").expect("valid eta quotient")
}

/// `G_5` together with the unit part of its `n`-th root.
#[derive(Clone, Debug, PartialEq)]
pub struct G5Root {
    pub n: u32,
    /// `w^-5 (1 - 12 w + ...)`.
    pub g5: RatSeries,
    /// `(G_5 w^5)^(1/n)` from the power-series root.
    pub unit_root: RatSeries,
    /// `(eta(z/11)/eta(z))^(12/n)` without its leading power, when `n | 12`.
    pub eta_unit: Option<RatSeries>,
    /// Exponent of `w` in front of the root, `-5/n`.
    pub lead_exponent: Rational,
}

pub fn g5_family(n: u32, truncation: usize) -> Result<G5Root> {
    if n == 0 {
        return Err(crate::Error::InvalidArgument("root degree must be positive".into()));
    }
    let g5 = g5_quotient().expand(WIDTH, truncation)?;
    let unit = g5.normalize()?.unit;
    let unit_root = unit.nth_root_normalized(n)?;
    let eta_unit = if 12 % n == 0 {
        let e = (12 / n) as i64;
        Some(EtaQuotient::new(vec![(Rational::new(1.into(), 11.into()), e), (Rational::from_integer(1.into()), -e)])?.expand_unit(WIDTH, truncation)?)
    } else {
        None
    };
    Ok(G5Root { n, g5, unit_root, eta_unit, lead_exponent: Rational::new((-5).into(), n.into()) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_terms() {
        let r = g5_family(1, 5).unwrap();
        assert_eq!(r.g5.lead(), -5);
        let c: Vec<i64> = r.g5.coeffs().iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect();
        assert_eq!(c, vec![1, -12, 54, -88, -99]);
    }

    #[test]
    fn roots_match_eta_quotients() {
        for n in [2, 3, 4, 6, 12] {
            let r = g5_family(n, 60).unwrap();
            assert_eq!(Some(r.unit_root), r.eta_unit, "n = {n}");
        }
        let r = g5_family(7, 30).unwrap();
        assert!(r.eta_unit.is_none());
        assert!(r.unit_root.coeffs().iter().any(|c| !c.is_integer()));
    }
}
