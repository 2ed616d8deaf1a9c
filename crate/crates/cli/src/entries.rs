//! Named series the `detect` command understands.

use ubdkit::qseries::EtaQuotient;
use ubdkit::x011::{build_catalog, g5_quotient, GroupCatalogEntry, WIDTH};
use ubdkit::{AlgebraicNumber, Error, LaurentSeries, NfSeries, RatSeries, Result};

use crate::cache::{CacheKey, Lookup, SeriesCache};
use ubdkit::qseries::AnySeries;

pub const INDEX_FIVE: [&str; 6] = ["fP", "fQ+1P", "fQ+2P", "fQ+3P", "fQ+4P", "fQ"];
pub const INDEX_TWO: [&str; 3] = ["fP1", "fP2", "fP3"];
pub const ZETA13: &str = "zeta13";
pub const G5: &str = "G5";

pub fn labels() -> Vec<&'static str> {
    INDEX_FIVE.iter().chain(INDEX_TWO.iter()).copied().chain([G5, ZETA13]).collect()
}

pub enum Entry {
    Catalog(GroupCatalogEntry),
    Eta { label: &'static str, quotient: EtaQuotient, width: u32, root: Option<u32> },
}

/// `Ok(None)` for an unknown label.
pub fn lookup(label: &str) -> Result<Option<Entry>> {
    if label == G5 {
        return Ok(Some(Entry::Eta { label: G5, quotient: g5_quotient(), width: WIDTH, root: None }));
    }
    if label == ZETA13 {
        let quotient = EtaQuotient::parse("1:2,13:-2")?;
        return Ok(Some(Entry::Eta { label: ZETA13, quotient, width: 1, root: Some(3) }));
    }
    let index = if INDEX_FIVE.contains(&label) {
        5
    } else if INDEX_TWO.contains(&label) {
        2
    } else {
        return Ok(None);
    };
    Ok(build_catalog(index)?.into_iter().find(|e| e.label == label).map(Entry::Catalog))
}

impl Entry {
    pub fn label(&self) -> &str {
        match self {
            Entry::Catalog(e) => &e.label,
            Entry::Eta { label, .. } => label,
        }
    }

    pub fn default_root(&self) -> Option<u32> {
        match self {
            Entry::Catalog(e) => Some(e.root_degree),
            Entry::Eta { root, .. } => *root,
        }
    }
}

/// A series over `Q` or over a number field.
#[derive(Clone, Debug, PartialEq)]
pub enum Expansion {
    Rational(RatSeries),
    Algebraic(NfSeries),
}

impl From<AnySeries> for Expansion {
    fn from(s: AnySeries) -> Self {
        match s {
            AnySeries::Rational(r) => Expansion::Rational(r),
            AnySeries::Algebraic(a) => Expansion::Algebraic(a),
        }
    }
}

/// Notes emitted while serving a series, e.g. cache corruption.
pub type Warnings = Vec<String>;

/// `len` coefficients of the catalog entry's expansion, read from or
/// written to the cache when one is given.
pub fn catalog_series(
    entry: &GroupCatalogEntry,
    len: usize,
    cache: Option<&SeriesCache>,
    warnings: &mut Warnings,
) -> Result<NfSeries> {
    let key = CacheKey::new("series", &[("entry", entry.label.clone()), ("terms", len.to_string())]);
    if let Some(c) = cache {
        match c.load(&key) {
            Lookup::Hit(s) => match remap(entry, s) {
                Some(s) if s.truncation() == len => return Ok(s),
                _ => warnings.push(format!("cache entry {} does not match {}; recomputing", key.hex, entry.label)),
            },
            Lookup::Corrupt(why) => warnings.push(format!("cache entry {} is corrupt ({why}); recomputing", key.hex)),
            Lookup::Miss => {}
        }
    }
    let s = ubdkit::x011::expand_on_curve(&entry.generator_function, len)?;
    if let Some(c) = cache {
        if let Err(e) = c.store(&key, &s) {
            warnings.push(format!("could not write cache entry {}: {e}", key.hex));
        }
    }
    Ok(s)
}

/// Moves parsed coefficients into the entry's own field so that valuation
/// data certified for it applies.
fn remap(entry: &GroupCatalogEntry, s: AnySeries) -> Option<NfSeries> {
    match (s, &entry.field) {
        (AnySeries::Rational(r), _) => Some(r.map(AlgebraicNumber::rational)),
        (AnySeries::Algebraic(a), Some(k)) => {
            let parsed = a.coeffs().iter().find_map(|c| c.field().cloned())?;
            if parsed.poly() != k.poly() {
                return None;
            }
            let coeffs = a.coeffs().iter().map(|c| AlgebraicNumber::from_coords(k, &c.coords())).collect();
            LaurentSeries::new(a.width(), a.lead(), coeffs).ok()
        }
        (AnySeries::Algebraic(_), None) => None,
    }
}

pub fn entry_series(entry: &Entry, len: usize, cache: Option<&SeriesCache>, warnings: &mut Warnings) -> Result<Expansion> {
    match entry {
        Entry::Catalog(e) => Ok(Expansion::Algebraic(catalog_series(e, len, cache, warnings)?)),
        Entry::Eta { quotient, width, .. } => Ok(Expansion::Rational(quotient.expand(*width, len)?)),
    }
}

pub fn unknown_label(label: &str) -> Error {
    Error::InvalidArgument(format!("unknown entry '{label}'; available: {}", labels().join(", ")))
}
