//! Exact tools for unbounded-denominator experiments on character groups
//! of the genus-one group of level 11.

pub mod census;
pub mod ellcurve;
pub mod error;
pub mod exactnum;
pub mod qseries;
pub mod scalar;
pub mod ubdetect;
pub mod x011;

pub use error::{Error, Result};
pub use exactnum::{AlgebraicNumber, NumberField, Poly};
pub use qseries::{EtaQuotient, LaurentSeries};
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;

pub type RatSeries = LaurentSeries<Rational>;
pub type NfSeries = LaurentSeries<AlgebraicNumber>;
pub type RatPoly = Poly<Rational>;
pub type NfPoly = Poly<AlgebraicNumber>;
