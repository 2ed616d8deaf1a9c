use std::fs;
use std::process::{Command, Output};

use proptest::prelude::*;
use ubdkit::exactnum::rational::rat;
use ubdkit::qseries::AnySeries;
use ubdkit::{AlgebraicNumber, LaurentSeries, NumberField, Scalar};
use ubdkit_cli::cache::{CacheKey, Lookup, SeriesCache};
use ubdkit_cli::{Failure, EXIT_INCONCLUSIVE, EXIT_INTERNAL, EXIT_VALIDATION};

fn ubdkit(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ubdkit")).args(args).arg("--cache-dir").arg(cache).output().unwrap()
}

fn text(b: &[u8]) -> String {
    String::from_utf8_lossy(b).into_owned()
}

#[test]
fn eta_records_and_width_errors() {
    let dir = tempfile::tempdir().unwrap();
    let o = ubdkit(&["eta", "1:2,13:-2", "--width", "1", "--terms", "4"], dir.path());
    assert!(o.status.success());
    assert_eq!(text(&o.stdout), "series v1\nwidth 1\nlead -1\ntruncation 4\nfield rational\n1/1\n-2/1\n-1/1\n2/1\nend\n");
    let o = ubdkit(&["eta", "1:1", "--width", "24", "--terms", "5"], dir.path());
    assert!(text(&o.stdout).contains("lead 1\n"));
    let o = ubdkit(&["eta", "1/11:12,1:-12", "--width", "1"], dir.path());
    assert_eq!(o.status.code(), Some(EXIT_VALIDATION as i32));
    assert!(text(&o.stderr).contains("width 1"));
}

#[test]
fn unknown_entries_list_labels() {
    let dir = tempfile::tempdir().unwrap();
    let o = ubdkit(&["detect", "--entry", "fX"], dir.path());
    assert_eq!(o.status.code(), Some(EXIT_VALIDATION as i32));
    let err = text(&o.stderr);
    for label in ubdkit_cli::entries::labels() {
        assert!(err.contains(label), "{label} missing from {err}");
    }
    let o = ubdkit(&["detect", "--entry", "G5"], dir.path());
    assert_eq!(o.status.code(), Some(EXIT_VALIDATION as i32));
    let o = ubdkit(&["catalog", "--index", "3"], dir.path());
    assert_eq!(o.status.code(), Some(EXIT_VALIDATION as i32));
}

#[test]
fn composite_root_is_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    let o = ubdkit(&["detect", "--entry", "zeta13", "--root", "6", "--prime", "3", "--terms", "30", "--format", "records"], dir.path());
    assert_eq!(o.status.code(), Some(EXIT_INCONCLUSIVE as i32));
    assert!(text(&o.stdout).contains("status=Inconclusive"));
    assert!(text(&o.stdout).contains("not prime"));
}

#[test]
fn internal_errors_map_to_four() {
    assert_eq!(Failure::from(ubdkit::Error::Inconsistent(7)).code, EXIT_INTERNAL);
    assert_eq!(Failure::from(ubdkit::Error::NotPrime(4)).code, EXIT_VALIDATION);
}

#[test]
fn census_and_detect_records() {
    let dir = tempfile::tempdir().unwrap();
    let o = ubdkit(&["census", "--xmax", "3", "--format", "records"], dir.path());
    assert_eq!(text(&o.stdout), "census x=3 count=4 ratio=4/9\n");
    let o = ubdkit(&["detect", "--entry", "fP", "--prime", "5", "--root", "5", "--terms", "300", "--format", "records"], dir.path());
    assert!(o.status.success());
    assert!(text(&o.stdout).starts_with("verdict label=fP status=UnboundedCertified witness=1 valuation=-1/1"));
    let o = ubdkit(&["catalog", "--index", "5", "--format", "records", "--terms", "3"], dir.path());
    let out = text(&o.stdout);
    assert_eq!(out.matches("entry ").count(), 6);
    assert_eq!(out.matches("congruence known-congruence").count(), 1);
}

#[test]
fn corrupt_cache_is_rebuilt_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["detect", "--entry", "fQ+2P", "--terms", "20", "--format", "records"];
    let first = ubdkit(&args, dir.path());
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1);
    let good = fs::read_to_string(&files[0]).unwrap();
    fs::write(&files[0], good.replace("end\n", "")).unwrap();
    let second = ubdkit(&args, dir.path());
    assert!(text(&second.stderr).contains("corrupt"));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(fs::read_to_string(&files[0]).unwrap(), good);
    let third = ubdkit(&args, dir.path());
    assert!(third.stderr.is_empty());
    assert_eq!(first.stdout, third.stdout);
}

#[test]
fn series_files_can_be_detected() {
    let dir = tempfile::tempdir().unwrap();
    let o = ubdkit(&["eta", "1:2,13:-2", "--terms", "31"], dir.path());
    let path = dir.path().join("zeta.series");
    fs::write(&path, &o.stdout).unwrap();
    let o = ubdkit(&["detect", "--series-file", path.to_str().unwrap(), "--root", "3", "--terms", "30"], dir.path());
    assert!(o.status.success());
    assert!(text(&o.stdout).contains("UnboundedCertified"));
}

#[test]
fn held_lock_skips_the_write() {
    let dir = tempfile::tempdir().unwrap();
    let cache = SeriesCache::new(dir.path());
    let key = CacheKey::new("series", &[("entry", "x".into())]);
    let s = LaurentSeries::new(1, 0, vec![rat(1, 1)]).unwrap();
    fs::write(dir.path().join(format!("{}.lock", key.hex)), "").unwrap();
    assert!(!cache.store(&key, &s).unwrap());
    assert!(matches!(cache.load(&key), Lookup::Miss));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cache_round_trip(lead in -6i64..6, c in proptest::collection::vec((-99i64..100, 1i64..99, -99i64..100), 1..30)) {
        prop_assume!(c[0].0 != 0);
        let dir = tempfile::tempdir().unwrap();
        let cache = SeriesCache::new(dir.path());
        let key = CacheKey::new("series", &[("lead", lead.to_string())]);
        let rational = LaurentSeries::new(11, lead, c.iter().map(|&(n, d, _)| rat(n, d)).collect()).unwrap();
        prop_assert!(cache.store(&key, &rational).unwrap());
        match cache.load(&key) {
            Lookup::Hit(AnySeries::Rational(back)) => prop_assert_eq!(back, rational),
            other => prop_assert!(false, "{:?}", other),
        }
        let k = NumberField::from_i64(&[101, 41, 11, 1, 1]).unwrap();
        let t = k.generator();
        let alg = LaurentSeries::new(
            11,
            lead,
            c.iter().map(|&(n, d, m)| &(&AlgebraicNumber::rational(&rat(n, d)) + &t.pow(2).scale(&rat(m, d))) + &t).collect(),
        )
        .unwrap();
        let key2 = CacheKey::new("series", &[("lead", lead.to_string()), ("field", "quartic".into())]);
        prop_assert!(cache.store(&key2, &alg).unwrap());
        match cache.load(&key2) {
            Lookup::Hit(AnySeries::Algebraic(back)) => prop_assert_eq!(back, alg),
            other => prop_assert!(false, "{:?}", other),
        }
    }
}
