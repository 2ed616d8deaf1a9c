//! Catalogs of cyclic character groups of index 2 and 5.

use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::xy::{curve, expand_on_curve};
use crate::ellcurve::{
    coset_x_locus, function_with_divisor, points_over, torsion_x_locus, CurveFunction, CurvePoint, WeierstrassCurve,
};
use crate::exactnum::nfpoly::{adjoin, lift_poly, roots_in_field};
use crate::exactnum::rational::{format_rational, int, rat};
use crate::exactnum::{certify_unique_prime, AlgebraicNumber, NumberField, Poly};
use crate::qseries::format_series;
use crate::scalar::Scalar;
use crate::{Error, Rational, Result};

/// Whether the character group is known to be a congruence subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CongruenceFlag {
    KnownCongruence,
    ExpectedNoncongruence,
}

impl CongruenceFlag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CongruenceFlag::KnownCongruence => "known-congruence",
            CongruenceFlag::ExpectedNoncongruence => "expected-noncongruence",
        }
    }
}

/// One cyclic character group: its function field is obtained by adjoining
/// an `root_degree`-th root of `generator_function`.
#[derive(Clone, Debug)]
pub struct GroupCatalogEntry {
    pub label: String,
    pub index: u32,
    /// The torsion point `P` with `div f = n (P) - n (O)`.
    pub point: CurvePoint<AlgebraicNumber>,
    pub generator_function: CurveFunction<AlgebraicNumber>,
    pub root_degree: u32,
    /// `None` for rational coefficients.
    pub field: Option<Arc<NumberField>>,
    pub congruence: CongruenceFlag,
}

impl GroupCatalogEntry {
    pub fn is_rational(&self) -> bool {
        self.field.is_none()
    }
}

/// The curve with coefficients viewed as algebraic numbers.
pub fn algebraic_curve() -> WeierstrassCurve<AlgebraicNumber> {
    curve().map(AlgebraicNumber::rational)
}

/// x-locus `5x^2 + 5x - 29` of the order-5 subgroup without rational points,
/// made monic.
pub fn subgroup_q_locus() -> Poly<Rational> {
    Poly::new(vec![rat(-29, 5), int(1), int(1)])
}

/// `x^4 + x^3 + 11x^2 + 41x + 101`, the x-locus of `P_0 + Q` for `P_0 = [16, 60]`
/// and `Q` running over the nonzero points of that subgroup.
pub fn quartic_orbit() -> Result<Poly<Rational>> {
    let e = curve();
    let locus = torsion_x_locus(&e, 5)?;
    let p0 = e.point(int(16), int(60))?;
    coset_x_locus(&e, &locus, &subgroup_q_locus(), &p0)
}

/// The quartic field holding every 5-torsion point.
pub fn five_torsion_field() -> Result<Arc<NumberField>> {
    NumberField::new(quartic_orbit()?)
}

/// The sextic splitting field of the 2-division cubic, as `K(sqrt(-11))`
/// over the cubic field `K`.
pub fn two_torsion_field() -> Result<Arc<NumberField>> {
    let cubic = torsion_x_locus(&curve(), 2)?.polynomial;
    let (k, _) = NumberField::from_rational_poly(&cubic)?;
    let g = Poly::new(vec![AlgebraicNumber::rational(&int(11)), AlgebraicNumber::rational(&int(0)), AlgebraicNumber::one()]);
    let ext = adjoin(&k, &g)?;
    // (1 + sqrt(-11))/2 has minimal polynomial s^2 - s + 3, irreducible mod 2.
    let hint = (AlgebraicNumber::rational(&int(1)) + ext.root.clone()).scale(&rat(1, 2));
    certify_unique_prime(&ext.field, 2, &[hint]);
    Ok(ext.field)
}

fn rational_point(x: i64, y: i64) -> CurvePoint<AlgebraicNumber> {
    CurvePoint::Affine { x: AlgebraicNumber::rational(&int(x)), y: AlgebraicNumber::rational(&int(y)) }
}

type EntrySeed = (String, CurvePoint<AlgebraicNumber>, Option<Arc<NumberField>>, CongruenceFlag);

/// Catalog for index 2 (three entries) or 5 (six entries).
pub fn build_catalog(index: u32) -> Result<Vec<GroupCatalogEntry>> {
    let e = algebraic_curve();
    let points: Vec<EntrySeed> = match index {
        2 => {
            let field = two_torsion_field()?;
            let cubic = torsion_x_locus(&curve(), 2)?.polynomial;
            let half = AlgebraicNumber::rational(&rat(-1, 2));
            roots_in_field(&cubic, &field)?
                .into_iter()
                .enumerate()
                .map(|(i, x)| {
                    let p = CurvePoint::Affine { x, y: half.clone() };
                    (format!("fP{}", i + 1), p, Some(field.clone()), CongruenceFlag::ExpectedNoncongruence)
                })
                .collect()
        }
        5 => {
            let field = five_torsion_field()?;
            let p = rational_point(5, 5);
            let q = points_over(&curve(), &subgroup_q_locus(), &field)?
                .into_iter()
                .next()
                .ok_or_else(|| Error::TorsionStructure("no point of order 5 over the quartic field".into()))?;
            let mut out = vec![("fP".to_string(), p.clone(), None, CongruenceFlag::ExpectedNoncongruence)];
            for i in 1..=4 {
                let pt = e.add(&q, &e.mul(&p, i));
                out.push((format!("fQ+{i}P"), pt, Some(field.clone()), CongruenceFlag::ExpectedNoncongruence));
            }
            out.push(("fQ".to_string(), q, Some(field), CongruenceFlag::KnownCongruence));
            out
        }
        _ => return Err(Error::InvalidArgument(format!("no catalog for index {index}"))),
    };
    points
        .into_par_iter()
        .map(|(label, point, field, congruence)| {
            let f = function_with_divisor(&e, index as u64, &point)?;
            Ok(GroupCatalogEntry {
                label,
                index,
                point,
                generator_function: f,
                root_degree: index,
                field,
                congruence,
            })
        })
        .collect()
}

/// Export record: label, index, field polynomial, the polynomials `u`, `v`,
/// `d` of `(u + v y)/d`, then the leading `terms` coefficients of the
/// expansion in the series format.
pub fn export_entry(entry: &GroupCatalogEntry, terms: usize) -> Result<String> {
    let mut out = export_header(entry);
    out.push_str(&format_series(&expand_on_curve(&entry.generator_function, terms)?));
    Ok(out)
}

/// The lines of [`export_entry`] before the series block.
pub fn export_header(entry: &GroupCatalogEntry) -> String {
    let mut out = String::new();
    writeln!(out, "entry {}", entry.label).expect("string write");
    writeln!(out, "index {}", entry.index).expect("string write");
    writeln!(out, "congruence {}", entry.congruence.as_str()).expect("string write");
    match &entry.field {
        None => writeln!(out, "field rational").expect("string write"),
        Some(k) => writeln!(out, "field {}", join_rationals(k.poly().coeffs())).expect("string write"),
    }
    let f = &entry.generator_function;
    for (name, p) in [("u", f.u()), ("v", f.v()), ("d", f.denominator())] {
        let parts: Vec<String> = p.coeffs().iter().map(format_coeff).collect();
        writeln!(out, "{}", format!("{name} {}", parts.join(" ; ")).trim_end()).expect("string write");
    }
    out
}

fn join_rationals(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(" ")
}

fn format_coeff(c: &AlgebraicNumber) -> String {
    join_rationals(&c.coords())
}

/// Whether `x` is a root of `g`.
pub fn is_root(g: &Poly<Rational>, x: &AlgebraicNumber) -> bool {
    lift_poly(g).eval(x).is_zero()
}
