use num_traits::{One, Zero};
use proptest::prelude::*;
use ubdkit::exactnum::rational::rat;
use ubdkit::exactnum::{
    has_unique_prime, min_poly, newton_polygon_valuations, nf_arith, ord_at_unique_prime, val_p, ArithOp, IntVal,
};
use ubdkit::{AlgebraicNumber, NumberField, Rational};

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    (-2000i64..2000, 1i64..2000).prop_filter_map("nonzero", |(n, d)| (n != 0).then(|| rat(n, d)))
}

fn element(field: std::sync::Arc<NumberField>) -> impl Strategy<Value = AlgebraicNumber> {
    proptest::collection::vec((-9i64..10, 1i64..5), field.degree())
        .prop_map(move |c| AlgebraicNumber::from_coords(&field, &c.iter().map(|&(n, d)| rat(n, d)).collect::<Vec<_>>()))
}

fn quartic() -> std::sync::Arc<NumberField> {
    NumberField::from_i64(&[101, 41, 11, 1, 1]).unwrap()
}

proptest! {
    #[test]
    fn valuation_is_multiplicative_and_ultrametric(r in nonzero_rat(), s in nonzero_rat(), p in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
        let (vr, vs) = (val_p(&r, p).unwrap().finite().unwrap(), val_p(&s, p).unwrap().finite().unwrap());
        prop_assert_eq!(val_p(&(&r * &s), p).unwrap(), IntVal::Finite(vr + vs));
        prop_assert!(val_p(&(&r + &s), p).unwrap() >= IntVal::Finite(vr.min(vs)));
    }

    #[test]
    fn field_axioms(a in element(quartic()), b in element(quartic()), c in element(quartic())) {
        let mul = |x: &AlgebraicNumber, y: &AlgebraicNumber| nf_arith(x, y, ArithOp::Mul).unwrap();
        let add = |x: &AlgebraicNumber, y: &AlgebraicNumber| nf_arith(x, y, ArithOp::Add).unwrap();
        prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
        prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
        prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
        if !a.is_zero() {
            let inv = nf_arith(&AlgebraicNumber::one(), &a, ArithOp::Div).unwrap();
            prop_assert!(mul(&a, &inv).is_one());
        }
    }

    #[test]
    fn min_poly_vanishes(a in element(quartic())) {
        let m = min_poly(&a);
        let deg = m.degree().unwrap();
        prop_assert_eq!(4 % deg, 0);
        let at = m.map(AlgebraicNumber::rational).eval(&a);
        prop_assert!(at.is_zero());
    }

    #[test]
    fn profile_sums_to_constant_term(a in element(quartic()), p in prop::sample::select(vec![2u64, 3, 5, 11])) {
        prop_assume!(!a.is_zero());
        let profile = newton_polygon_valuations(&a, p).unwrap();
        let m = min_poly(&a);
        let c0 = val_p(&m.coeff(0), p).unwrap().finite().unwrap();
        prop_assert_eq!(profile.degree(), m.degree().unwrap());
        prop_assert_eq!(profile.weighted_sum(), Rational::from_integer(c0.into()));
    }

    #[test]
    fn rational_profile_is_val_p(r in nonzero_rat(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let profile = newton_polygon_valuations(&AlgebraicNumber::rational(&r), p).unwrap();
        let v = val_p(&r, p).unwrap().finite().unwrap();
        prop_assert_eq!(profile.slopes, vec![(Rational::from_integer(v.into()), 1)]);
    }

    #[test]
    fn unique_prime_order_is_the_single_slope(c in proptest::collection::vec(-6i64..7, 3)) {
        // 2 is totally ramified in Q(cbrt 2).
        let k = NumberField::from_i64(&[-2, 0, 0, 1]).unwrap();
        prop_assert!(has_unique_prime(&k, 2));
        let a = AlgebraicNumber::from_coords(&k, &c.iter().map(|&x| rat(x, 1)).collect::<Vec<_>>());
        prop_assume!(min_poly(&a).degree() == Some(3));
        let profile = newton_polygon_valuations(&a, 2).unwrap();
        prop_assert_eq!(profile.slopes.len(), 1);
        prop_assert_eq!(ord_at_unique_prime(&a, 2).unwrap(), profile.min());
    }
}
