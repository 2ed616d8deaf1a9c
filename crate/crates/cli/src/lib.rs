//! Command-line orchestration for ubdkit.

pub mod args;
pub mod cache;
pub mod entries;
pub mod render;

use std::fmt::Write as _;

use rayon::prelude::*;
use ubdkit::census::{s_count, ubd_lower_bound_experiment, LatticeTriple};
use ubdkit::ellcurve::{default_local_terms, verify_divisor};
use ubdkit::exactnum::format_rational;
use ubdkit::qseries::{format_series, parse_series, EtaQuotient};
use ubdkit::ubdetect::{detect, CatalogReport, CatalogRow, UbdStatus, UbdVerdict};
use ubdkit::x011::{algebraic_curve, build_catalog, expand_xy, export_header, CuspChart};
use ubdkit::Error;

pub use args::{Cli, Command, OutputFormat, RunConfig};
use cache::SeriesCache;
use entries::{catalog_series, entry_series, lookup, unknown_label, Expansion, Warnings};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;
pub const EXIT_INTERNAL: u8 = 4;

#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub code: u8,
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn validation(message: impl Into<String>) -> Self {
        Failure { code: EXIT_VALIDATION, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inconsistent(_) | Error::TorsionStructure(_) | Error::LocalPrecision(_) | Error::NotTorsion(_) => {
                EXIT_INTERNAL
            }
            _ => EXIT_VALIDATION,
        };
        Failure { code, message: e.to_string() }
    }
}

pub fn run(config: &RunConfig) -> Result<Outcome, Failure> {
    let cache = config.cache_dir.as_ref().map(SeriesCache::new);
    let cache = cache.as_ref();
    let fmt = config.output_format;
    let mut out = Outcome::default();
    match &config.command {
        Command::Eta { quotient, width, terms } => {
            let s = EtaQuotient::parse(quotient)?.expand(*width, *terms)?;
            out.stdout = format_series(&s);
        }
        Command::ExpandXy { terms } => out.stdout = expand_xy_output(fmt, *terms)?,
        Command::Catalog { index, terms } => out.stdout = catalog_output(fmt, *index, *terms, cache, &mut out.warnings)?,
        Command::Detect { entry, series_file, prime, root, terms } => {
            let (label, series, root) = match (entry, series_file) {
                (Some(label), _) => {
                    let e = lookup(label)?.ok_or_else(|| unknown_label(label))?;
                    let root = root.or(e.default_root()).ok_or_else(|| Failure::validation(format!("{label} needs --root")))?;
                    (label.clone(), entry_series(&e, terms + 1, cache, &mut out.warnings)?, root)
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Failure::validation(format!("{}: {e}", path.display())))?;
                    let label = path.file_name().map_or_else(|| "series".into(), |n| n.to_string_lossy().into_owned());
                    (label, parse_series(&text)?.into(), root.expect("validated"))
                }
                (None, None) => return Err(Failure::validation("give --entry or --series-file")),
            };
            let p = prime.unwrap_or(root as u64);
            let v = match &series {
                Expansion::Rational(s) => detect(s, root, p, *terms)?,
                Expansion::Algebraic(s) => detect(s, root, p, *terms)?,
            };
            if v.status == UbdStatus::Inconclusive {
                out.code = EXIT_INCONCLUSIVE;
            }
            out.stdout = render::verdicts(fmt, &[(label, &v)]);
        }
        Command::Census { xmax, b } => out.stdout = census_output(fmt, *xmax, b.as_deref())?,
        Command::Report { index, terms } => {
            let indices = index.map_or_else(|| vec![2, 5], |i| vec![i]);
            let mut all = Vec::new();
            for i in indices {
                let report = analyze(i, *terms, cache, &mut out.warnings)?;
                out.stdout += &render::verdicts(
                    fmt,
                    &report.rows.iter().map(|r| (r.label.clone(), &r.verdict)).collect::<Vec<_>>(),
                );
                out.stdout += &render::record("summary", &summary_fields(i, &report));
                all.extend(report.rows);
            }
            if all.iter().all(|r| r.verdict.status == UbdStatus::Inconclusive) {
                out.code = EXIT_INCONCLUSIVE;
            }
        }
    }
    Ok(out)
}

fn expand_xy_output(fmt: OutputFormat, terms: usize) -> Result<String, Failure> {
    let xy = expand_xy(terms)?;
    Ok(match fmt {
        OutputFormat::Records => {
            format!("name x\n{}name y\n{}", format_series(&xy.x), format_series(&xy.y))
        }
        OutputFormat::Table => {
            let hi = xy.y.precision().min(xy.x.precision());
            let cell = |s: &ubdkit::RatSeries, e: i64| s.coeff(e).map_or_else(|| "-".into(), |c| format_rational(&c));
            let rows: Vec<Vec<String>> =
                (xy.y.lead()..hi).map(|e| vec![e.to_string(), cell(&xy.x, e), cell(&xy.y, e)]).collect();
            render::table(&["exponent", "x", "y"], &rows)
        }
    })
}

fn catalog_output(
    fmt: OutputFormat,
    index: u32,
    terms: usize,
    cache: Option<&SeriesCache>,
    warnings: &mut Warnings,
) -> Result<String, Failure> {
    let entries = build_catalog(index)?;
    let curve = algebraic_curve();
    let mut out = String::new();
    let mut rows = Vec::new();
    for e in &entries {
        match fmt {
            OutputFormat::Records => {
                out += &export_header(e);
                out += &format_series(&catalog_series(e, terms, cache, warnings)?);
            }
            OutputFormat::Table => {
                let n = index as u64;
                let check =
                    verify_divisor(&curve, &e.generator_function, n, &e.point, &CuspChart, default_local_terms(n))?;
                rows.push(vec![
                    e.label.clone(),
                    e.index.to_string(),
                    e.congruence.as_str().to_string(),
                    e.field.as_ref().map_or(1, |k| k.degree()).to_string(),
                    e.root_degree.to_string(),
                    if check.passed() { "ok" } else { "FAILED" }.to_string(),
                ]);
            }
        }
    }
    if fmt == OutputFormat::Table {
        out = render::table(&["label", "index", "congruence", "field degree", "root", "divisor"], &rows);
    }
    Ok(out)
}

fn census_output(fmt: OutputFormat, x: u64, b: Option<&str>) -> Result<String, Failure> {
    let r = s_count(x)?;
    let mut fields = vec![("x", x.to_string()), ("count", r.count.to_string()), ("ratio", format_rational(&r.ratio))];
    if let Some(b) = b {
        let b = LatticeTriple::parse(b)?;
        let e = ubd_lower_bound_experiment(&b, x)?;
        fields = vec![
            ("x", x.to_string()),
            ("b", format!("{},{},{}", b.l, b.n, b.m)),
            ("count", e.count.to_string()),
            ("ratio", format_rational(&e.ratio)),
            ("restricted", e.restricted_count.to_string()),
            ("coprime_m", e.coprime_m.to_string()),
            ("c1", format_rational(&e.c1)),
            ("lower_bound", e.lower_bound.to_string()),
        ];
    }
    Ok(render::key_values(fmt, "census", &fields))
}

/// `analyze_catalog` with series served through the cache.
pub fn analyze(index: u32, terms: usize, cache: Option<&SeriesCache>, warnings: &mut Warnings) -> Result<CatalogReport, Failure> {
    let entries = build_catalog(index)?;
    let results: Vec<Result<(CatalogRow, Warnings), Error>> = entries
        .par_iter()
        .map(|e| {
            let mut w = Vec::new();
            let s = catalog_series(e, terms + 1, cache, &mut w)?;
            let verdict: UbdVerdict = detect(&s, e.root_degree, e.root_degree as u64, terms)?;
            Ok((CatalogRow { label: e.label.clone(), congruence: e.congruence, verdict }, w))
        })
        .collect();
    let mut rows = Vec::new();
    for r in results {
        let (row, w) = r?;
        warnings.extend(w);
        rows.push(row);
    }
    Ok(CatalogReport { rows })
}

fn summary_fields(index: u32, r: &CatalogReport) -> Vec<(&'static str, String)> {
    vec![
        ("index", index.to_string()),
        ("certified", r.count(UbdStatus::UnboundedCertified).to_string()),
        ("bounded", r.count(UbdStatus::BoundedSoFar).to_string()),
        ("inconclusive", r.count(UbdStatus::Inconclusive).to_string()),
        ("hypothesis", if r.hypothesis_confirmed() { "confirmed" } else { "not-confirmed" }.to_string()),
    ]
}

/// Writes `warning: ...` lines for `outcome` to `err`.
pub fn write_warnings(outcome: &Outcome, err: &mut String) {
    for w in &outcome.warnings {
        writeln!(err, "warning: {w}").expect("string write");
    }
}
