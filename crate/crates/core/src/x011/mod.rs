//! The level-11 dataset: coordinates at the cusp, catalogs of cyclic
//! character groups, and the `G_5` root family.

pub mod catalog;
pub mod g5;
pub mod xy;

pub use catalog::{
    algebraic_curve, build_catalog, export_entry, export_header, five_torsion_field, quartic_orbit, subgroup_q_locus,
    two_torsion_field, CongruenceFlag, GroupCatalogEntry,
};
pub use g5::{g5_family, g5_quotient, G5Root};
pub use xy::{curve, differential, expand_on_curve, expand_xy, CuspChart, XyExpansion, WIDTH};
