//! Table and record layouts.

use ubdkit::exactnum::format_rational;
use ubdkit::ubdetect::UbdVerdict;
use ubdkit::Rational;

use crate::args::OutputFormat;

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let s: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        s.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

/// `kind k=v k=v ...`, one line per record. Values holding spaces are quoted.
pub fn record(kind: &str, fields: &[(&str, String)]) -> String {
    let mut out = kind.to_string();
    for (k, v) in fields {
        if v.contains(' ') {
            out += &format!(" {k}={v:?}");
        } else {
            out += &format!(" {k}={v}");
        }
    }
    out + "\n"
}

fn opt_rational(r: &Option<Rational>) -> String {
    r.as_ref().map_or_else(|| "-".into(), format_rational)
}

pub const VERDICT_HEADER: [&str; 10] =
    ["label", "status", "witness", "valuation", "threshold", "truncation", "mode", "prime", "root", "diagnostic"];

fn verdict_fields(label: &str, v: &UbdVerdict) -> Vec<(&'static str, String)> {
    vec![
        ("label", label.to_string()),
        ("status", v.status.to_string()),
        ("witness", v.witness_index.map_or_else(|| "-".into(), |m| m.to_string())),
        ("valuation", opt_rational(&v.witness_valuation)),
        ("threshold", format_rational(&v.threshold)),
        ("truncation", v.truncation_used.to_string()),
        ("mode", v.valuation_mode.to_string()),
        ("prime", v.prime.to_string()),
        ("root", v.root_degree.to_string()),
        ("diagnostic", v.diagnostic.clone().unwrap_or_else(|| "-".into())),
    ]
}

pub fn verdicts(format: OutputFormat, rows: &[(String, &UbdVerdict)]) -> String {
    match format {
        OutputFormat::Records => rows.iter().map(|(l, v)| record("verdict", &verdict_fields(l, v))).collect(),
        OutputFormat::Table => {
            let cells: Vec<Vec<String>> =
                rows.iter().map(|(l, v)| verdict_fields(l, v).into_iter().map(|(_, c)| c).collect()).collect();
            table(&VERDICT_HEADER, &cells)
        }
    }
}

/// One record, or a two-column table of its fields.
pub fn key_values(format: OutputFormat, kind: &str, fields: &[(&str, String)]) -> String {
    match format {
        OutputFormat::Records => record(kind, fields),
        OutputFormat::Table => {
            let rows: Vec<Vec<String>> = fields.iter().map(|(k, v)| vec![k.to_string(), v.clone()]).collect();
            table(&["field", "value"], &rows)
        }
    }
}
