//! Running the detector over a catalog of character groups.

use rayon::prelude::*;

use super::detect::{detect, UbdStatus, UbdVerdict};
use crate::x011::{expand_on_curve, CongruenceFlag, GroupCatalogEntry};
use crate::Result;

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogRow {
    pub label: String,
    pub congruence: CongruenceFlag,
    pub verdict: UbdVerdict,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogReport {
    pub rows: Vec<CatalogRow>,
}

impl CatalogReport {
    pub fn count(&self, status: UbdStatus) -> usize {
        self.rows.iter().filter(|r| r.verdict.status == status).count()
    }

    pub fn row(&self, label: &str) -> Option<&CatalogRow> {
        self.rows.iter().find(|r| r.label == label)
    }

    /// Every expected-noncongruence entry certified and no known-congruence
    /// entry certified.
    pub fn hypothesis_confirmed(&self) -> bool {
        !self.rows.is_empty()
            && self.rows.iter().all(|r| match r.congruence {
                CongruenceFlag::ExpectedNoncongruence => r.verdict.status == UbdStatus::UnboundedCertified,
                CongruenceFlag::KnownCongruence => r.verdict.status != UbdStatus::UnboundedCertified,
            })
    }
}

/// Detects each entry's `root_degree`-th root at the prime `root_degree`,
/// using coefficients up to `w^(lead + T)`.
pub fn analyze_catalog(entries: &[GroupCatalogEntry], t: usize) -> Result<CatalogReport> {
    let rows = entries
        .par_iter()
        .map(|e| {
            let series = expand_on_curve(&e.generator_function, t + 1)?;
            let verdict = detect(&series, e.root_degree, e.root_degree as u64, t)?;
            Ok(CatalogRow { label: e.label.clone(), congruence: e.congruence, verdict })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CatalogReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_catalog() {
        let r = analyze_catalog(&[], 10).unwrap();
        assert!(r.rows.is_empty());
        assert!(!r.hypothesis_confirmed());
    }
}
