//! Weierstrass curves, torsion, and functions with prescribed divisor.

pub mod curve;
pub mod divpoly;
pub mod function;
pub mod verify;

pub use curve::{CurvePoint, PointOp, WeierstrassCurve};
pub use divpoly::{coset_x_locus, division_polynomial, points_over, torsion_x_locus, TorsionLocus};
pub use function::{function_with_divisor, CurveFunction};
pub use verify::{default_local_terms, local_parameterization, verify_divisor, Chart, DivisorCheck, FormalGroupChart};
