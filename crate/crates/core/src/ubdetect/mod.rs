//! Certificates of unbounded denominators for roots of Laurent series.

pub mod appendix;
pub mod catalog;
pub mod detect;

pub use appendix::{appendix_check, AppendixOutcome};
pub use catalog::{analyze_catalog, CatalogReport, CatalogRow};
pub use detect::{detect, growth_profile, select_mode, DetectCoeff, GrowthProfile, UbdStatus, UbdVerdict, ValuationMode};
