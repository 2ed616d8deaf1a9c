//! The twelve acceptance criteria. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.

use std::process::Command as Proc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ubdkit::census::{enumerate_triples, join_is_full, join_is_full_snf, s_count, LatticeTriple};
use ubdkit::ellcurve::{function_with_divisor, torsion_x_locus, CurvePoint};
use ubdkit::exactnum::rational::{int, rat};
use ubdkit::qseries::EtaQuotient;
use ubdkit::ubdetect::{analyze_catalog, appendix_check, detect, UbdStatus};
use ubdkit::x011::{build_catalog, curve, expand_on_curve, expand_xy, g5_family, quartic_orbit, WIDTH};
use ubdkit::{LaurentSeries, Poly, RatSeries, Rational};

// Pinned limits. Every comparison except the census ratio is exact.
const RATIO_BRACKET: (f64, f64) = (0.81, 0.835);
const LIMIT_GOLDEN: Duration = Duration::from_secs(10);
const LIMIT_INTEGRALITY: Duration = Duration::from_secs(60);
const LIMIT_INDEX5: Duration = Duration::from_secs(300);
const LIMIT_INDEX2: Duration = Duration::from_secs(60);
const LIMIT_ETA_ROOTS: Duration = Duration::from_secs(30);
const LIMIT_CENSUS: Duration = Duration::from_secs(120);
const LIMIT_APPENDIX: Duration = Duration::from_secs(60);
const SNF_PAIRS: usize = 10_000;
const APPENDIX_INSTANCES: usize = 100;

type Outcome = Result<String, String>;

fn ints(s: &RatSeries, from: i64, to: i64) -> Vec<Rational> {
    (from..=to).map(|e| s.coeff(e).expect("in range")).collect()
}

fn ivec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&c| int(c)).collect()
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let el = start.elapsed();
    if el > limit {
        Err(format!("took {el:.1?}, limit {limit:?}"))
    } else {
        Ok(el)
    }
}

fn golden_xy() -> Outcome {
    let start = Instant::now();
    let xy = expand_xy(200).map_err(|e| e.to_string())?;
    let x = ivec(&[1, 2, 4, 5, 8, 1, 7, -11, 10, -12, -18]);
    let y = ivec(&[1, 3, 7, 12, 17, 26, 19, 37, -15, -16, -67]);
    if xy.x.lead() != -2 || ints(&xy.x, -2, 8) != x {
        return Err("x coefficients differ".into());
    }
    if xy.y.lead() != -3 || ints(&xy.y, -3, 7) != y {
        return Err("y coefficients differ".into());
    }
    Ok(format!("x to w^8 and y to w^7 exact, {:.1?}", within(start, LIMIT_GOLDEN)?))
}

fn integrality() -> Outcome {
    let start = Instant::now();
    let xy = expand_xy(500).map_err(|e| e.to_string())?;
    for (name, s) in [("x", &xy.x), ("y", &xy.y)] {
        if s.truncation() < 500 {
            return Err(format!("{name} has only {} terms", s.truncation()));
        }
        if let Some(i) = s.coeffs().iter().position(|c| !c.is_integer()) {
            return Err(format!("{name} coefficient {i} is {c}", c = s.coeffs()[i]));
        }
    }
    Ok(format!("500 terms of x and y integral, {:.1?}", within(start, LIMIT_INTEGRALITY)?))
}

fn f_p_reconstruction() -> Outcome {
    let e = curve();
    let p = e.point(int(5), int(5)).map_err(|e| e.to_string())?;
    let f = function_with_divisor(&e, 5, &p).map_err(|e| e.to_string())?.normalized_at_infinity();
    if f.u() != &Poly::from_i64(&[-55, 30, -4]) || f.v() != &Poly::from_i64(&[-4, 1]) || !f.is_polynomial() {
        return Err(format!("got u = {:?}, v = {:?}", f.u(), f.v()));
    }
    let s = expand_on_curve(&f, 6).map_err(|e| e.to_string())?;
    if s.lead() != -5 || s.coeffs().to_vec() != ivec(&[1, 1, -3, 13, 20, -23]) {
        return Err("expansion differs".into());
    }
    Ok("xy - 4x^2 + 30x - 4y - 55 = w^-5 + w^-4 - 3w^-3 + 13w^-2 + 20w^-1 - 23 + ...".into())
}

fn quartic() -> Outcome {
    let want = Poly::from_i64(&[101, 41, 11, 1, 1]);
    let locus = torsion_x_locus(&curve(), 5).map_err(|e| e.to_string())?;
    if !locus.irrational_factors().contains(&&want) {
        return Err("quartic is not a factor of the 5-division polynomial".into());
    }
    if quartic_orbit().map_err(|e| e.to_string())? != want {
        return Err("orbit locus differs".into());
    }
    Ok("x^4 + x^3 + 11x^2 + 41x + 101 divides the 5-locus and is the orbit locus".into())
}

fn torsion() -> Outcome {
    let e = curve();
    let p = e.point(int(5), int(5)).map_err(|e| e.to_string())?;
    if !e.mul(&p, 5).is_infinity() {
        return Err("5P != O".into());
    }
    if e.mul(&p, 3) != (CurvePoint::Affine { x: int(16), y: int(60) }) {
        return Err("3P != [16, 60]".into());
    }
    Ok("5[5,5] = O, 3[5,5] = [16,60]".into())
}

fn index_five() -> Outcome {
    let start = Instant::now();
    let cat = build_catalog(5).map_err(|e| e.to_string())?;
    let report = analyze_catalog(&cat, 300).map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    for r in &report.rows {
        let want = if r.label == "fQ" { UbdStatus::BoundedSoFar } else { UbdStatus::UnboundedCertified };
        if r.verdict.status != want {
            return Err(format!("{} is {}", r.label, r.verdict.status));
        }
        notes.push(format!("{}:{}", r.label, r.verdict.valuation_mode));
    }
    if report.rows.len() != 6 {
        return Err(format!("{} entries", report.rows.len()));
    }
    Ok(format!("5 certified, fQ bounded [{}], {:.1?}", notes.join(" "), within(start, LIMIT_INDEX5)?))
}

fn index_two() -> Outcome {
    let start = Instant::now();
    let cat = build_catalog(2).map_err(|e| e.to_string())?;
    let report = analyze_catalog(&cat, 300).map_err(|e| e.to_string())?;
    for r in &report.rows {
        let v = &r.verdict;
        if v.status != UbdStatus::UnboundedCertified || v.prime != 2 || v.witness_index.is_none_or(|m| m > 2) {
            return Err(format!("{}: {} witness {:?} {:?}", r.label, v.status, v.witness_index, v.diagnostic));
        }
    }
    if report.rows.len() != 3 {
        return Err(format!("{} entries", report.rows.len()));
    }
    Ok(format!("3 certified at p = 2, witness m <= 2, {:.1?}", within(start, LIMIT_INDEX2)?))
}

fn eta_roots() -> Outcome {
    let start = Instant::now();
    let r = g5_family(12, 200).map_err(|e| e.to_string())?;
    let eta = EtaQuotient::parse("1/11:1,1:-1").and_then(|q| q.expand_unit(WIDTH, 200)).map_err(|e| e.to_string())?;
    if r.unit_root != eta || r.unit_root.truncation() != 200 {
        return Err("12th root differs from eta(z/11)/eta(z)".into());
    }
    let g5 = r.g5;
    let v7 = detect(&g5, 7, 7, 199).map_err(|e| e.to_string())?;
    if v7.status != UbdStatus::UnboundedCertified {
        return Err(format!("root 7 at 7 is {}", v7.status));
    }
    Ok(format!(
        "12th root = eta(z/11)/eta(z) to 200 terms; 7th root certified at m = {}, {:.1?}",
        v7.witness_index.unwrap_or(0),
        within(start, LIMIT_ETA_ROOTS)?
    ))
}

fn zeta13() -> Outcome {
    let zeta = EtaQuotient::parse("1:2,13:-2").and_then(|q| q.expand(1, 101)).map_err(|e| e.to_string())?;
    let v = detect(&zeta, 3, 3, 100).map_err(|e| e.to_string())?;
    if v.status != UbdStatus::UnboundedCertified || v.witness_index != Some(1) {
        return Err(format!("{} witness {:?}", v.status, v.witness_index));
    }
    let b1 = zeta.normalize().and_then(|n| n.unit.nth_root_normalized(3)).map_err(|e| e.to_string())?.coeffs()[1].clone();
    if b1 != rat(-2, 3) {
        return Err(format!("b_1 = {b1}"));
    }
    Ok("cube root 1 - (2/3)q + ..., certified at m = 1".into())
}

fn census() -> Outcome {
    let start = Instant::now();
    for x in 2..=500u64 {
        let n = enumerate_triples(x).map_err(|e| e.to_string())?.len() as u64;
        let s = s_count(x).map_err(|e| e.to_string())?.count;
        if n != s {
            return Err(format!("X = {x}: enumeration {n}, closed sum {s}"));
        }
    }
    let r = s_count(2000).map_err(|e| e.to_string())?;
    let ratio = r.count as f64 / 4.0e6;
    if !(RATIO_BRACKET.0 < ratio && ratio < RATIO_BRACKET.1) {
        return Err(format!("S(2000)/2000^2 = {ratio}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let triple = |rng: &mut ChaCha8Rng| {
        let m = rng.gen_range(1..50);
        LatticeTriple::new(rng.gen_range(1..50), rng.gen_range(0..m), m).expect("valid")
    };
    let mut full = 0;
    for _ in 0..SNF_PAIRS {
        let (g, b) = (triple(&mut rng), triple(&mut rng));
        let fast = join_is_full(&g, &b);
        if fast != join_is_full_snf(&g, &b) {
            return Err(format!("gcd test and SNF disagree on {g:?}, {b:?}"));
        }
        full += fast as usize;
    }
    Ok(format!(
        "X <= 500 agree; S(2000)/2000^2 = {ratio:.6}; SNF agrees on {SNF_PAIRS} pairs ({full} full), {:.1?}",
        within(start, LIMIT_CENSUS)?
    ))
}

fn unit_series(coeffs: Vec<i64>, t: usize) -> RatSeries {
    let mut v: Vec<Rational> = coeffs.into_iter().map(int).collect();
    v.resize(t, int(0));
    v[0] = int(1);
    LaurentSeries::new(1, 0, v).expect("nonzero")
}

fn appendix() -> Outcome {
    const T: usize = 100;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut nontrivial = 0;
    for i in 0..APPENDIX_INSTANCES {
        let n = [2u32, 3, 4, 5, 6][rng.gen_range(0..5)];
        let n1 = rng.gen_range(1..n);
        let small = |rng: &mut ChaCha8Rng, len: usize, scale: i64| -> Vec<i64> {
            (0..len).map(|_| scale * rng.gen_range(-3..=3)).collect()
        };
        // g is an n-th root of an integral unit series; scaling its
        // coefficients by powers of n makes integral roots common.
        let scale = [1, n as i64, (n * n) as i64][rng.gen_range(0..3)];
        let len = rng.gen_range(2..5);
        let base = unit_series(small(&mut rng, len, scale), T);
        let g = base.nth_root_normalized(n).map_err(|e| e.to_string())?;
        let h = unit_series(small(&mut rng, 3, 1), T);
        let o = appendix_check(&g, &h, n, n1, T).map_err(|e| e.to_string())?;
        if !o.consistent() {
            return Err(format!("instance {i}: hypotheses hold but g^{n1} is not integral"));
        }
        nontrivial += o.hypotheses_hold as usize;
    }
    if nontrivial == 0 {
        return Err("no instance satisfied the hypotheses".into());
    }
    Ok(format!(
        "{APPENDIX_INSTANCES} instances consistent ({nontrivial} with hypotheses satisfied), {:.1?}",
        within(start, LIMIT_APPENDIX)?
    ))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let bin = env!("CARGO_BIN_EXE_ubdkit");
    let runs: &[&[&str]] = &[
        &["eta", "1:2,13:-2", "--width", "1", "--terms", "40"],
        &["eta", "1:1", "--width", "24", "--terms", "5", "--format", "records"],
        &["expand-xy", "--terms", "60"],
        &["catalog", "--index", "5", "--terms", "12", "--format", "records"],
        &["catalog", "--index", "2"],
        &["detect", "--entry", "fP", "--prime", "5", "--root", "5", "--terms", "300"],
        &["detect", "--entry", "fP2", "--terms", "40", "--format", "records"],
        &["census", "--xmax", "200", "--b", "2,1,2", "--format", "records"],
        &["report", "--terms", "120"],
    ];
    for args in runs {
        let mut outputs = Vec::new();
        for _ in 0..2 {
            let o = Proc::new(bin).args(*args).arg("--cache-dir").arg(dir.path()).output().map_err(|e| e.to_string())?;
            if !o.status.success() {
                return Err(format!("{args:?} exited with {:?}", o.status.code()));
            }
            outputs.push(o.stdout);
        }
        if outputs[0] != outputs[1] || outputs[0].is_empty() {
            return Err(format!("{args:?} differs between runs"));
        }
    }
    Ok(format!("{} invocations byte-identical across cache miss and hit", runs.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("golden x/y expansions", golden_xy),
        ("integrality to T = 500", integrality),
        ("f_P reconstruction", f_p_reconstruction),
        ("quartic orbit", quartic),
        ("torsion sanity", torsion),
        ("index-5 detection", index_five),
        ("index-2 detection", index_two),
        ("eta-root controls", eta_roots),
        ("Gamma_0(13) example", zeta13),
        ("census", census),
        ("appendix property suite", appendix),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(note) => println!("criterion {:>2} PASS  {name}: {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
