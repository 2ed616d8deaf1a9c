//! Truncated Laurent series, formal roots and eta quotients.

pub mod eta;
pub mod serial;
pub mod series;

pub use eta::EtaQuotient;
pub use serial::{format_series, parse_series, AnySeries, SeriesCoeff};
pub use series::{LaurentSeries, Normalized};
