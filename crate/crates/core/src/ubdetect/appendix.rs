//! Empirical check of the root lemma: if `h`, `g^n` and `h g^n1` have
//! integral coefficients, so does `g^n1`.

use crate::{RatSeries, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixOutcome {
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
}

impl AppendixOutcome {
    /// The implication holds on this instance.
    pub fn consistent(&self) -> bool {
        !self.hypotheses_hold || self.conclusion_holds
    }
}

/// Index of the first non-integral coefficient among the first `terms`.
pub fn first_denominator(s: &RatSeries, terms: usize) -> Option<usize> {
    s.coeffs().iter().take(terms).position(|c| !c.is_integer())
}

/// Checks the hypotheses to `t` terms and the conclusion to `t - 10`.
pub fn appendix_check(g: &RatSeries, h: &RatSeries, n: u32, n1: u32, t: usize) -> Result<AppendixOutcome> {
    if n1 == 0 || n1 >= n {
        return Err(crate::Error::InvalidArgument("need 1 <= n1 < n".into()));
    }
    let g = g.truncate(t);
    let h = h.truncate(t);
    let gn1 = g.pow(n1);
    let hypotheses_hold = first_denominator(&h, t).is_none()
        && first_denominator(&g.pow(n), t).is_none()
        && first_denominator(&h.checked_mul(&gn1)?, t).is_none();
    let conclusion_holds = first_denominator(&gn1, t.saturating_sub(10)).is_none();
    Ok(AppendixOutcome { hypotheses_hold, conclusion_holds })
}
