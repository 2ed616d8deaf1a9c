use proptest::prelude::*;
use ubdkit::exactnum::rational::{int, rat};
use ubdkit::exactnum::{val_p, IntVal};
use ubdkit::qseries::EtaQuotient;
use ubdkit::ubdetect::{detect, UbdStatus, UbdVerdict, ValuationMode};
use ubdkit::x011::{curve, expand_on_curve, g5_quotient, WIDTH};
use ubdkit::ellcurve::function_with_divisor;
use ubdkit::{AlgebraicNumber, RatSeries, Rational};

fn zeta(t: usize) -> RatSeries {
    EtaQuotient::parse("1:2,13:-2").unwrap().expand(1, t).unwrap()
}

fn f_p(t: usize) -> RatSeries {
    let e = curve();
    let f = function_with_divisor(&e, 5, &e.point(int(5), int(5)).unwrap()).unwrap();
    expand_on_curve(&f, t).unwrap()
}

/// `max_{m <= t} -val_p(b_m / b_0)` computed directly from the root.
fn worst_denominator(f: &RatSeries, n: u32, p: u64, t: usize) -> i64 {
    let unit = f.normalize().unwrap().unit.truncate(t + 1);
    let root = unit.nth_root_normalized(n).unwrap();
    root.coeffs()
        .iter()
        .map(|c| match val_p(c, p).unwrap() {
            IntVal::Finite(v) => -v,
            IntVal::Infinity => 0,
        })
        .max()
        .unwrap()
}

#[test]
fn certificates_match_growing_denominators() {
    let cases: Vec<(&str, RatSeries, u32, u64)> = vec![
        ("zeta13", zeta(321), 3, 3),
        ("G5", g5_quotient().expand(WIDTH, 321).unwrap(), 7, 7),
        ("fP", f_p(321), 5, 5),
    ];
    for (label, f, n, p) in cases {
        let v = detect(&f, n, p, 40).unwrap();
        assert_eq!(v.status, UbdStatus::UnboundedCertified, "{label}");
        assert_eq!(v.valuation_mode, ValuationMode::Rational);
        let ts = [20, 40, 80, 160, 320];
        let worst: Vec<i64> = ts.iter().map(|&t| worst_denominator(&f, n, p, t)).collect();
        assert!(worst.windows(2).all(|w| w[0] <= w[1]), "{label}: {worst:?}");
        assert!(worst[4] >= worst[0] + 2, "{label}: {worst:?}");
    }
}

fn same_verdict(a: &UbdVerdict, b: &UbdVerdict) -> bool {
    a.status == b.status
        && a.witness_index == b.witness_index
        && a.witness_valuation == b.witness_valuation
        && a.threshold == b.threshold
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn verdict_ignores_scalars_and_shifts(n in -300i64..300, d in 1i64..300, k in -6i64..6) {
        prop_assume!(n != 0);
        let c = rat(n, d);
        for (f, root, p) in [(zeta(41), 3u32, 3u64), (f_p(41), 5, 5)] {
            let base = detect(&f, root, p, 40).unwrap();
            let moved = detect(&f.scale(&c).shift(k), root, p, 40).unwrap();
            prop_assert!(same_verdict(&base, &moved), "{:?} vs {:?}", base, moved);
            let alg = f.map(AlgebraicNumber::rational).scale(&AlgebraicNumber::rational(&c));
            prop_assert!(same_verdict(&base, &detect(&alg, root, p, 40).unwrap()));
        }
    }
}

#[test]
fn square_of_f_p_gives_the_same_verdict() {
    let f = f_p(61);
    let sq = &f * &f;
    let a = detect(&f, 5, 5, 60).unwrap();
    let b = detect(&sq, 5, 5, 60).unwrap();
    assert_eq!(a.status, UbdStatus::UnboundedCertified);
    assert_eq!(a.status, b.status);
    assert_eq!(b.valuation_mode, ValuationMode::Rational);
}

#[test]
fn bounded_roots_stay_bounded() {
    // (eta(z/11)/eta(z))^(12/n) has integer coefficients for n | 12.
    let g5 = g5_quotient().expand(WIDTH, 121).unwrap();
    for (n, p) in [(2, 2), (3, 3), (4, 2), (6, 3), (12, 2), (12, 3)] {
        let v = detect(&g5, n, p, 120).unwrap();
        assert_eq!(v.status, UbdStatus::BoundedSoFar, "n = {n}, p = {p}");
        assert_eq!(v.threshold, Rational::from_integer(0.into()));
    }
}
