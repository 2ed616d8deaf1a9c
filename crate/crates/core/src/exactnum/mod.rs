//! Exact arithmetic: rationals, polynomials, number fields and valuations.

pub mod field;
mod linalg;
pub mod nfpoly;
pub mod poly;
pub mod rational;
pub mod valuation;
pub mod zfactor;

pub use field::{nf_arith, AlgebraicNumber, ArithOp, NumberField, PlaceBounds};
pub use nfpoly::{adjoin, factor_over_field, roots_in_field, roots_over_field, Extension};
pub use poly::Poly;
pub use rational::{format_rational, parse_rational, val_p, IntVal};
pub use valuation::{
    certify_unique_prime, has_unique_prime, min_poly, newton_polygon_valuations, newton_slopes,
    ord_at_unique_prime, ValuationProfile,
};
