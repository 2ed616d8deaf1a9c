//! Text serialization of series.
//!
//! ```text
//! series v1
//! width 11
//! lead -5
//! truncation 3
//! field rational          (or: field c0 c1 ... cn, defining polynomial)
//! 1/1                     (one line per coefficient; power-basis
//! -12/1                    coordinates separated by spaces in a
//! 54/1                     number field)
//! end
//! ```

use std::sync::Arc;

use super::series::LaurentSeries;
use crate::exactnum::rational::{format_rational, parse_rational};
use crate::exactnum::{AlgebraicNumber, NumberField, Poly};
use crate::scalar::Scalar;
use crate::{Error, Rational, Result};

pub trait SeriesCoeff: Scalar {
    /// Defining polynomial of the coefficient field, `None` for Q.
    fn field_of(coeffs: &[Self]) -> Option<Arc<NumberField>>;

    fn format_coeff(&self, degree: usize) -> String;
}

impl SeriesCoeff for Rational {
    fn field_of(_: &[Self]) -> Option<Arc<NumberField>> {
        None
    }

    fn format_coeff(&self, _: usize) -> String {
        format_rational(self)
    }
}

impl SeriesCoeff for AlgebraicNumber {
    fn field_of(coeffs: &[Self]) -> Option<Arc<NumberField>> {
        coeffs.iter().find_map(|c| c.field().cloned())
    }

    fn format_coeff(&self, degree: usize) -> String {
        (0..degree).map(|i| format_rational(&self.coord(i))).collect::<Vec<_>>().join(" ")
    }
}

/// A parsed series over whichever field its header declares.
#[derive(Clone, Debug, PartialEq)]
pub enum AnySeries {
    Rational(LaurentSeries<Rational>),
    Algebraic(LaurentSeries<AlgebraicNumber>),
}

impl AnySeries {
    pub fn to_algebraic(&self) -> LaurentSeries<AlgebraicNumber> {
        match self {
            AnySeries::Rational(s) => s.map(AlgebraicNumber::rational),
            AnySeries::Algebraic(s) => s.clone(),
        }
    }
}

pub fn format_series<K: SeriesCoeff>(s: &LaurentSeries<K>) -> String {
    let field = K::field_of(s.coeffs());
    let mut out = String::new();
    out.push_str("series v1\n");
    out.push_str(&format!("width {}\n", s.width()));
    out.push_str(&format!("lead {}\n", s.lead()));
    out.push_str(&format!("truncation {}\n", s.truncation()));
    let degree = match &field {
        None => {
            out.push_str("field rational\n");
            1
        }
        Some(f) => {
            let cs: Vec<String> = f.poly().coeffs().iter().map(format_rational).collect();
            out.push_str(&format!("field {}\n", cs.join(" ")));
            f.degree()
        }
    };
    for c in s.coeffs() {
        out.push_str(&c.format_coeff(degree));
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

fn header<'a>(line: Option<&'a str>, key: &str) -> Result<&'a str> {
    line.and_then(|l| l.strip_prefix(key))
        .and_then(|l| l.strip_prefix(' '))
        .ok_or_else(|| Error::Parse(format!("expected '{key}' line")))
}

pub fn parse_series(text: &str) -> Result<AnySeries> {
    let mut lines = text.lines();
    if lines.next() != Some("series v1") {
        return Err(Error::Parse("missing 'series v1' header".into()));
    }
    let num = |s: &str, what: &str| -> Result<i64> {
        s.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad {what} '{s}'")))
    };
    let width = num(header(lines.next(), "width")?, "width")?;
    let lead = num(header(lines.next(), "lead")?, "lead")?;
    let truncation = num(header(lines.next(), "truncation")?, "truncation")?;
    let field_line = header(lines.next(), "field")?;
    if width <= 0 || truncation < 0 {
        return Err(Error::Parse("width must be positive and truncation nonnegative".into()));
    }
    let width = width as u32;
    let body: Vec<&str> = lines.collect();
    let Some((last, coeff_lines)) = body.split_last() else {
        return Err(Error::Parse("missing 'end'".into()));
    };
    if *last != "end" {
        return Err(Error::Parse("missing 'end'".into()));
    }
    if coeff_lines.len() as i64 != truncation {
        return Err(Error::Parse(format!(
            "truncation {truncation} but {} coefficient lines",
            coeff_lines.len()
        )));
    }
    let series_err = |e: Error| Error::Parse(format!("invalid series: {e}"));
    let check_lead = |s_lead: i64| -> Result<()> {
        if s_lead != lead {
            Err(Error::Parse("leading coefficient is zero".into()))
        } else {
            Ok(())
        }
    };
    if field_line.trim() == "rational" {
        let coeffs = coeff_lines.iter().map(|l| parse_rational(l.trim())).collect::<Result<Vec<_>>>()?;
        let s = LaurentSeries::new(width, lead, coeffs).map_err(series_err)?;
        if truncation > 0 {
            check_lead(s.lead())?;
        }
        return Ok(AnySeries::Rational(s));
    }
    let poly = Poly::parse_coeffs(field_line)?;
    let field = NumberField::new(poly)?;
    let n = field.degree();
    let coeffs = coeff_lines
        .iter()
        .map(|l| {
            let cs = l.split_whitespace().map(parse_rational).collect::<Result<Vec<_>>>()?;
            if cs.len() != n {
                return Err(Error::Parse(format!("expected {n} coordinates, got {}", cs.len())));
            }
            Ok(AlgebraicNumber::from_coords(&field, &cs))
        })
        .collect::<Result<Vec<_>>>()?;
    let s = LaurentSeries::new(width, lead, coeffs).map_err(series_err)?;
    if truncation > 0 {
        check_lead(s.lead())?;
    }
    Ok(AnySeries::Algebraic(s))
}
