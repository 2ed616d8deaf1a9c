use proptest::prelude::*;
use ubdkit::census::{
    enumerate_triples, join_is_full, join_is_full_snf, s_count, smith_diagonal, ubd_lower_bound_experiment,
    LatticeTriple,
};

fn triple() -> impl Strategy<Value = LatticeTriple> {
    (1u64..50, 1u64..50).prop_flat_map(|(l, m)| (0..m).prop_map(move |n| LatticeTriple::new(l, n, m).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn gcd_criterion_matches_smith_form(g in triple(), b in triple()) {
        prop_assert_eq!(join_is_full(&g, &b), join_is_full_snf(&g, &b));
    }

    #[test]
    fn smith_diagonal_divides(a in proptest::collection::vec(-30i128..30, 6)) {
        let d = smith_diagonal(vec![a[0..2].to_vec(), a[2..4].to_vec(), a[4..6].to_vec()]);
        prop_assert_eq!(d.len(), 2);
        if d[0] != 0 {
            prop_assert_eq!(d[1] % d[0], 0);
        }
        let det_gcd = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| (a[2 * i] * a[2 * j + 1] - a[2 * i + 1] * a[2 * j]).abs())
            .fold(0i128, num_integer::gcd);
        prop_assert_eq!(d[0] * d[1], det_gcd);
    }
}

#[test]
fn enumeration_matches_closed_sum() {
    let mut prev = 0;
    for x in 2..=500 {
        let s = s_count(x).unwrap().count;
        assert_eq!(s, enumerate_triples(x).unwrap().len() as u64, "X = {x}");
        assert!(s >= prev);
        prev = s;
    }
}

#[test]
fn ratio_converges_to_half_zeta_two() {
    let r = |x: u64| {
        let c = s_count(x).unwrap();
        c.count as f64 / (x * x) as f64
    };
    let xs = [250u64, 500, 1000, 2000, 4000];
    let diffs: Vec<f64> = xs.windows(2).map(|w| (r(w[1]) - r(w[0])).abs()).collect();
    assert!(diffs.windows(2).all(|d| d[1] < d[0]), "{diffs:?}");
    let target = std::f64::consts::PI.powi(2) / 12.0;
    assert!((r(2000) - target).abs() < 0.01);
    assert!(0.81 < r(2000) && r(2000) < 0.835);
}

#[test]
fn restricted_counts_are_subsets() {
    for b in ["2,1,2", "3,2,5", "1,0,4", "5,3,6"] {
        let b = LatticeTriple::parse(b).unwrap();
        for x in [100, 200, 400] {
            let e = ubd_lower_bound_experiment(&b, x).unwrap();
            let all = s_count(x).unwrap();
            assert!(e.count <= all.count);
            assert!(e.restricted_count <= e.count);
            assert!(e.restricted_count >= e.lower_bound, "{b:?} X = {x}");
            assert!(e.ratio <= all.ratio);
            assert!((e.count as f64 / (x * x) as f64) < std::f64::consts::PI.powi(2) / 12.0 + 0.01);
        }
    }
}
